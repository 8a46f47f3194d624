#include "maxplus/scheduling.hpp"

#include <string>

namespace maxplus::scheduling {
namespace {

// Missing self-lags become the identity: x_i <= x_i always holds, and the
// feasibility boundary moves to big_trace = 0.
TropMatrix with_unit_diagonal(const TropMatrix& ss) {
  TropMatrix out = ss;
  for (std::size_t i = 0; i < out.rows(); ++i)
    if (out(i, i).is_zero()) out(i, i) = TropScalar::one();
  return out;
}

TropVector column_maxima(const TropMatrix& g) {
  TropVector out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    TropScalar m = TropScalar::zero();
    for (std::size_t j = 0; j < g.cols(); ++j) m = oplus(m, g(i, j));
    out[i] = m;
  }
  return out;
}

void check_positive_cycles(TropScalar t, double eps, const char* op) {
  if (!t.is_zero() && t.value() > eps)
    throw InfeasibleCycles(std::string(op) +
                           ": start-to-start constraints contain a positive-weight "
                           "cycle (total weight " +
                           std::to_string(t.value()) + ")");
}

}  // namespace

ScheduleResult latest_start_sf(const TropMatrix& sf, const TropVector& d, double eps) {
  const FirstKindOutcome fk = solve_first_kind(sf, d, eps);

  ScheduleResult res;
  res.diagnostics.delta = fk.delta;
  if (fk.exact_max_solution) {
    res.feasibility = Feasibility::exact;
    res.initiation = *fk.exact_max_solution;
    res.completion = fk.under_image;
  } else {
    res.feasibility = Feasibility::approximate;
    res.initiation = fk.quasi;
    res.completion = fk.quasi_image;
    res.band = ApproximateBand{fk.quasi,       fk.under,       fk.over,
                               fk.quasi_image, fk.under_image, fk.over_image};
  }
  return res;
}

ScheduleResult earliest_start_ss(const TropMatrix& ss, const TropVector& b, double eps) {
  if (!ss.is_square()) throw NotSquare("earliest_start_ss: constraint matrix");
  if (ss.rows() != b.size())
    throw DimensionMismatch("earliest_start_ss: matrix size vs early-start length");

  const TropMatrix a = with_unit_diagonal(ss);
  const TropScalar t = big_trace(a);
  check_positive_cycles(t, eps, "earliest_start_ss");

  ScheduleResult res;
  res.feasibility = Feasibility::family;
  res.diagnostics.big_trace = t;
  res.particular = mat_vec(star(a), b);
  if (approx_equal(t, TropScalar::one(), eps)) res.generators = generator(a, eps);
  res.initiation = (b.is_all_zero() && res.generators) ? column_maxima(*res.generators)
                                                       : *res.particular;
  return res;
}

ScheduleResult latest_start_mixed(const TropMatrix& sf, const TropMatrix& ss,
                                  const TropVector& d, double eps) {
  if (!ss.is_square()) throw NotSquare("latest_start_mixed: start-to-start matrix");
  if (sf.rows() != d.size() || sf.cols() != ss.rows())
    throw DimensionMismatch("latest_start_mixed: constraint shapes disagree");

  const TropMatrix a2 = with_unit_diagonal(ss);
  const TropScalar t = big_trace(a2);
  check_positive_cycles(t, eps, "latest_start_mixed");

  const TropMatrix gen = generator(a2, eps);
  const TropVector v = solve_first_kind_inequality(mat_mul(sf, gen), d);
  const TropVector x = mat_vec(gen, v);

  ScheduleResult res;
  res.feasibility = Feasibility::exact;
  res.diagnostics.big_trace = t;
  res.initiation = x;
  res.completion = mat_vec(sf, x);
  return res;
}

ScheduleResult min_flow_time(const TropMatrix& sf, const std::optional<TropVector>& d,
                             double eps) {
  const SpectralOutcome sp = eigenvectors(sf, eps);

  ScheduleResult res;
  res.diagnostics.lambda = sp.lambda;
  if (d) {
    const TropVector v = solve_first_kind_inequality(mat_mul(sf, sp.eigen_generators), *d);
    res.feasibility = Feasibility::exact;
    res.initiation = mat_vec(sp.eigen_generators, v);
  } else {
    res.feasibility = Feasibility::family;
    res.generators = sp.eigen_generators;
    res.initiation = column_maxima(sp.eigen_generators);
  }
  res.completion = mat_vec(sf, res.initiation);
  return res;
}

void ProjectProblem::validate() const {
  if (n_activities == 0) throw ValidationError("problem: no activities");
  const auto check_matrix = [&](const std::optional<TropMatrix>& m, const char* key) {
    if (!m) return;
    if (m->rows() != n_activities || m->cols() != n_activities)
      throw ValidationError(std::string("problem.") + key + ": expected " +
                            std::to_string(n_activities) + "x" +
                            std::to_string(n_activities) + ", got " +
                            std::to_string(m->rows()) + "x" + std::to_string(m->cols()));
  };
  const auto check_vector = [&](const std::optional<TropVector>& v, const char* key) {
    if (!v) return;
    if (v->size() != n_activities)
      throw ValidationError(std::string("problem.") + key + ": expected length " +
                            std::to_string(n_activities) + ", got " +
                            std::to_string(v->size()));
  };
  if (!sf && !ss) throw ValidationError("problem: needs at least one of sf, ss");
  check_matrix(sf, "sf");
  check_matrix(ss, "ss");
  check_vector(due, "due");
  check_vector(early, "early");

  const auto require = [&](bool ok, const char* key) {
    if (!ok)
      throw ValidationError(std::string("problem.") + key + ": required for " +
                            to_string(objective));
  };
  switch (objective) {
    case Objective::sf_latest:
      require(sf.has_value(), "sf");
      require(due.has_value(), "due");
      break;
    case Objective::ss_earliest:
      require(ss.has_value(), "ss");
      break;
    case Objective::mixed_latest:
      require(sf.has_value(), "sf");
      require(ss.has_value(), "ss");
      require(due.has_value(), "due");
      break;
    case Objective::min_flow:
      require(sf.has_value(), "sf");
      break;
  }
}

ScheduleResult solve(const ProjectProblem& problem, double eps) {
  problem.validate();
  switch (problem.objective) {
    case Objective::sf_latest:
      return latest_start_sf(*problem.sf, *problem.due, eps);
    case Objective::ss_earliest: {
      const TropVector b =
          problem.early ? *problem.early : TropVector(problem.n_activities);
      return earliest_start_ss(*problem.ss, b, eps);
    }
    case Objective::mixed_latest:
      return latest_start_mixed(*problem.sf, *problem.ss, *problem.due, eps);
    case Objective::min_flow:
      return min_flow_time(*problem.sf, problem.due, eps);
  }
  throw Error("solve: unknown objective");
}

bool verify(const ProjectProblem& problem, const ScheduleResult& result, double eps,
            std::string* why) {
  const auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const TropVector& x = result.initiation;

  switch (problem.objective) {
    case Objective::sf_latest: {
      const TropVector y = mat_vec(*problem.sf, x);
      if (result.feasibility == Feasibility::exact) {
        if (!approx_equal(y, *problem.due, eps))
          return fail("completion image does not match the due dates");
      } else {
        if (!result.band) return fail("approximate result lacks its band");
        if (!leq(mat_vec(*problem.sf, result.band->under), *problem.due))
          return fail("under-schedule completion exceeds the due dates");
        if (!leq(*problem.due, mat_vec(*problem.sf, result.band->over)))
          return fail("over-schedule completion is below the due dates");
      }
      return true;
    }
    case Objective::ss_earliest: {
      const TropMatrix a = with_unit_diagonal(*problem.ss);
      const TropVector b =
          problem.early ? *problem.early : TropVector(problem.n_activities);
      if (!approx_equal(vec_oplus(mat_vec(a, x), b), x, eps))
        return fail("start-to-start fixpoint equation does not hold");
      return true;
    }
    case Objective::mixed_latest: {
      const TropMatrix a2 = with_unit_diagonal(*problem.ss);
      if (!approx_equal(mat_vec(a2, x), x, eps))
        return fail("start-to-start fixpoint equation does not hold");
      if (!leq(mat_vec(*problem.sf, x), *problem.due))
        return fail("completion exceeds the due dates");
      return true;
    }
    case Objective::min_flow: {
      if (!result.diagnostics.lambda) return fail("missing eigenvalue diagnostic");
      const TropVector y = mat_vec(*problem.sf, x);
      if (problem.due && !leq(y, *problem.due))
        return fail("completion exceeds the due dates");
      const TropScalar lambda = *result.diagnostics.lambda;
      if (!approx_equal(metric(y, x), oplus(lambda, inv(lambda)), eps))
        return fail("maximum flow time differs from the eigenvalue bound");
      return true;
    }
  }
  return fail("unknown objective");
}

const char* to_string(Objective o) noexcept {
  switch (o) {
    case Objective::sf_latest:
      return "sf-latest";
    case Objective::ss_earliest:
      return "ss-earliest";
    case Objective::mixed_latest:
      return "mixed-latest";
    case Objective::min_flow:
      return "min-flow";
  }
  return "?";
}

std::optional<Objective> objective_from_string(const std::string& s) noexcept {
  for (Objective o : {Objective::sf_latest, Objective::ss_earliest,
                      Objective::mixed_latest, Objective::min_flow})
    if (s == to_string(o)) return o;
  return std::nullopt;
}

}  // namespace maxplus::scheduling
