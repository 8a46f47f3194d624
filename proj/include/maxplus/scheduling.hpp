#pragma once

#include <optional>
#include <string>

#include "maxplus/solvers.hpp"

namespace maxplus::scheduling {

enum class Objective { sf_latest, ss_earliest, mixed_latest, min_flow };

/// A project scheduling problem over n activities: start-to-finish lags
/// (completion of i is bounded below by starts plus sf_ij), start-to-start
/// lags, due dates and early start times. Missing lags are the zero.
struct ProjectProblem {
  std::size_t n_activities = 0;
  std::optional<TropMatrix> sf;
  std::optional<TropMatrix> ss;
  std::optional<TropVector> due;
  std::optional<TropVector> early;
  Objective objective = Objective::sf_latest;

  /// Shape and presence checks; throws ValidationError naming the field.
  void validate() const;
};

enum class Feasibility { exact, approximate, family };

/// The approximate-solution triple when due dates cannot be met exactly:
/// quasi/under/over schedules with their completion images. Any adjusted
/// due dates between under_image and over_image deviate from the original
/// ones by at most delta, with the minimum at quasi_image.
struct ApproximateBand {
  TropVector quasi, under, over;
  TropVector quasi_image, under_image, over_image;
};

struct Diagnostics {
  std::optional<TropScalar> delta;
  std::optional<TropScalar> big_trace;
  std::optional<TropScalar> lambda;
};

struct ScheduleResult {
  Feasibility feasibility = Feasibility::exact;
  TropVector initiation;                  // the canonical schedule
  std::optional<TropVector> completion;   // A x where completion is defined
  Diagnostics diagnostics;
  std::optional<ApproximateBand> band;
  std::optional<TropVector> particular;   // least member of a family
  std::optional<TropMatrix> generators;   // homogeneous part of a family

  ScheduleResult() : initiation(1) {}
};

/// Latest starts under start-to-finish constraints and due dates d:
/// solves sf x = d. Exact when the residual vanishes; otherwise an
/// approximate result carrying the quasi/under/over band.
ScheduleResult latest_start_sf(const TropMatrix& sf, const TropVector& d,
                               double eps = kDefaultTolerance);

/// Earliest starts under start-to-start constraints and early start times
/// b: solves ss x oplus b = x. Missing self-lags are normalized to the
/// identity first. The canonical schedule is the least solution (ss)* b,
/// or the generator column maxima when b is all-zero.
ScheduleResult earliest_start_ss(const TropMatrix& ss, const TropVector& b,
                                 double eps = kDefaultTolerance);

/// Latest starts meeting both families: ss x = x and sf x <= d. The
/// schedule is G (conj(d) sf G)^- with G the generators of ss.
ScheduleResult latest_start_mixed(const TropMatrix& sf, const TropMatrix& ss,
                                  const TropVector& d, double eps = kDefaultTolerance);

/// Schedules minimizing the maximum flow time (completion minus start).
/// Without due dates: the eigenvector family, achieving flow |lambda|.
/// With due dates d: the latest eigenvector with sf x <= d.
ScheduleResult min_flow_time(const TropMatrix& sf, const std::optional<TropVector>& d,
                             double eps = kDefaultTolerance);

/// Dispatch on problem.objective.
ScheduleResult solve(const ProjectProblem& problem, double eps = kDefaultTolerance);

/// Definitional recheck of a result against its problem (used by the CLI
/// --check flag). Returns false and fills why on the first violation.
bool verify(const ProjectProblem& problem, const ScheduleResult& result, double eps,
            std::string* why = nullptr);

const char* to_string(Objective o) noexcept;
std::optional<Objective> objective_from_string(const std::string& s) noexcept;

}  // namespace maxplus::scheduling
