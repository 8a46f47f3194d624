#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/generators.hpp"
#include "maxplus/scheduling.hpp"

using namespace maxplus;
using namespace maxplus::scheduling;
using fixtures::Z;

TEST_CASE("latest_start_sf: exact when due dates are attainable") {
  const auto res = latest_start_sf(fixtures::demo_sf(), fixtures::demo_due_feasible());
  CHECK(res.feasibility == Feasibility::exact);
  CHECK(res.initiation == TropVector::from_ieee({6, 4, 5, 3}));
  CHECK(*res.completion == TropVector::from_ieee({14, 11, 16, 15}));
  CHECK(*res.diagnostics.delta == TropScalar::one());
  CHECK(!res.band.has_value());
}

TEST_CASE("latest_start_sf: approximate band when they are not") {
  const auto res = latest_start_sf(fixtures::demo_sf(), fixtures::demo_due_tight());
  CHECK(res.feasibility == Feasibility::approximate);
  CHECK(*res.diagnostics.delta == TropScalar(4));
  REQUIRE(res.band.has_value());
  CHECK(res.band->quasi == TropVector::from_ieee({9, 5, 6, 5}));
  CHECK(res.band->under == TropVector::from_ieee({7, 3, 4, 3}));
  CHECK(res.band->over == TropVector::from_ieee({11, 7, 8, 7}));
  CHECK(res.band->quasi_image == TropVector::from_ieee({17, 13, 17, 17}));
  CHECK(res.band->under_image == TropVector::from_ieee({15, 11, 15, 15}));
  CHECK(res.band->over_image == TropVector::from_ieee({19, 15, 19, 19}));
  CHECK(res.initiation == res.band->quasi);
}

TEST_CASE("latest_start_sf: single activity") {
  const auto res = latest_start_sf(TropMatrix::from_ieee({{2}}),
                                   TropVector::from_ieee({10}));
  CHECK(res.feasibility == Feasibility::exact);
  CHECK(res.initiation == TropVector::from_ieee({8}));
}

TEST_CASE("latest_start_sf invariants on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t n = dim(rng);
    const TropMatrix a = testgen::regular_matrix(rng, n, n, 0.7);
    const TropVector truth = testgen::regular_vector(rng, n);
    const TropVector d = mat_vec(a, truth);

    const auto res = latest_start_sf(a, d);
    REQUIRE(res.feasibility == Feasibility::exact);
    // Every due date is met with equality by the completion image.
    CHECK(*res.completion == d);

    // Shift covariance: moving the due dates by c moves the starts by c.
    const TropScalar c = testgen::random_entry(rng);
    const auto shifted = latest_start_sf(a, vec_scale(c, d));
    CHECK(approx_equal(shifted.initiation, vec_scale(c, res.initiation), 1e-9));
  }
}

TEST_CASE("earliest_start_ss: homogeneous family") {
  const auto res = earliest_start_ss(fixtures::demo_ss(), TropVector(4));
  CHECK(res.feasibility == Feasibility::family);
  CHECK(*res.diagnostics.big_trace == TropScalar::one());
  REQUIRE(res.generators.has_value());
  CHECK(*res.generators == fixtures::demo_ss_generators());
  // Canonical member: generator column maxima.
  CHECK(res.initiation == TropVector::from_ieee({-2, 0, -3, 0}));
}

TEST_CASE("earliest_start_ss: early start times select the least solution") {
  const auto res = earliest_start_ss(fixtures::demo_ss(), fixtures::demo_early());
  CHECK(res.feasibility == Feasibility::family);
  CHECK(*res.particular == TropVector::from_ieee({3, 5, 2, 5}));
  CHECK(res.initiation == *res.particular);
  CHECK(*res.generators == fixtures::demo_ss_generators());
}

TEST_CASE("earliest_start_ss: unconstrained activities start at their early times") {
  const TropMatrix ss = TropMatrix::from_ieee({{0, Z}, {Z, 0}});
  const TropVector b = TropVector::from_ieee({1, 2});
  const auto res = earliest_start_ss(ss, b);
  CHECK(res.initiation == b);
}

TEST_CASE("earliest_start_ss: positive cycles are infeasible") {
  const TropMatrix bad = TropMatrix::from_ieee({{0, 3}, {-1, 0}});
  CHECK_THROWS_AS(earliest_start_ss(bad, TropVector(2)), InfeasibleCycles);
}

TEST_CASE("earliest_start_ss: every start is pinned by a binding constraint") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const TropMatrix ss = testgen::irreducible_nonpositive(rng, 5);
    const TropVector b = testgen::regular_vector(rng, 5, 0, 9);
    const auto res = earliest_start_ss(ss, b);
    const TropVector& x = res.initiation;
    for (std::size_t i = 0; i < 5; ++i) {
      TropScalar rhs = b[i];
      for (std::size_t j = 0; j < 5; ++j) {
        const TropScalar lag = i == j && ss(i, j).is_zero() ? TropScalar::one() : ss(i, j);
        rhs = oplus(rhs, otimes(lag, x[j]));
      }
      CHECK(x[i] == rhs);
    }
  }
}

TEST_CASE("latest_start_mixed reproduces the worked instance") {
  const auto res = latest_start_mixed(fixtures::demo_sf(), fixtures::demo_ss(),
                                      fixtures::demo_due_mixed());
  CHECK(res.feasibility == Feasibility::exact);
  CHECK(res.initiation == TropVector::from_ieee({1, 3, 0, 3}));

  const TropVector x = res.initiation;
  CHECK(mat_vec(fixtures::demo_ss(), x) == x);
  CHECK(leq(mat_vec(fixtures::demo_sf(), x), fixtures::demo_due_mixed()));
}

TEST_CASE("latest_start_mixed with identity-like start-to-start constraints") {
  // Only zero self-lags: the fixpoint condition is vacuous and the result
  // is the plain start-to-finish latest start.
  const TropMatrix free_ss(4, 4);
  const auto mixed = latest_start_mixed(fixtures::demo_sf(), free_ss,
                                        fixtures::demo_due_feasible());
  const auto plain =
      latest_start_sf(fixtures::demo_sf(), fixtures::demo_due_feasible());
  CHECK(mixed.initiation == plain.initiation);
}

TEST_CASE("latest_start_mixed satisfies both families on random instances") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const TropMatrix sf = testgen::regular_matrix(rng, 4, 4, 0.7, 1, 9);
    const TropMatrix ss = testgen::irreducible_nonpositive(rng, 4);
    const TropVector d = testgen::regular_vector(rng, 4, 20, 40);
    const auto res = latest_start_mixed(sf, ss, d);
    const TropVector& x = res.initiation;

    TropMatrix normalized = ss;
    for (std::size_t i = 0; i < 4; ++i)
      if (normalized(i, i).is_zero()) normalized(i, i) = TropScalar::one();
    CHECK(approx_equal(mat_vec(normalized, x), x, 1e-9));
    CHECK(leq(mat_vec(sf, x), d));
  }
}

TEST_CASE("min_flow_time without due dates returns the eigenvector family") {
  const auto res = min_flow_time(fixtures::demo_flow(), std::nullopt);
  CHECK(res.feasibility == Feasibility::family);
  CHECK(*res.diagnostics.lambda == TropScalar(4));
  CHECK(*res.generators == fixtures::demo_flow_generators());
  CHECK(res.initiation == TropVector::from_ieee({1, 1, 0}));
  CHECK(metric(mat_vec(fixtures::demo_flow(), res.initiation), res.initiation) ==
        TropScalar(4));
}

TEST_CASE("min_flow_time with due dates reproduces the worked instance") {
  const auto res = min_flow_time(fixtures::demo_flow(), fixtures::demo_flow_due());
  CHECK(res.feasibility == Feasibility::exact);
  CHECK(*res.diagnostics.lambda == TropScalar(4));
  CHECK(res.initiation == TropVector::from_ieee({4, 4, 3}));
  CHECK(leq(mat_vec(fixtures::demo_flow(), res.initiation), fixtures::demo_flow_due()));
}

TEST_CASE("min_flow_time: single activity") {
  const auto res = min_flow_time(TropMatrix::from_ieee({{3}}),
                                 TropVector::from_ieee({10}));
  CHECK(res.initiation == TropVector::from_ieee({7}));
  CHECK(*res.diagnostics.lambda == TropScalar(3));
}

TEST_CASE("min_flow_time achieves the optimal maximum flow time") {
  std::mt19937_64 rng(44);
  const TropMatrix a = fixtures::demo_flow();
  const auto res = min_flow_time(a, fixtures::demo_flow_due());
  const TropVector x = res.initiation;
  const TropVector y = mat_vec(a, x);
  TropScalar max_flow = TropScalar::zero();
  for (std::size_t i = 0; i < 3; ++i)
    max_flow = oplus(max_flow, TropScalar(y[i].value() - x[i].value()));
  CHECK(max_flow == TropScalar(4));

  // No feasible regular schedule beats the eigenvalue bound.
  int tried = 0;
  for (int probe = 0; probe < 1000; ++probe) {
    const TropVector z = testgen::real_regular_vector(rng, 3, -10, 5);
    const TropVector yz = mat_vec(a, z);
    if (!leq(yz, fixtures::demo_flow_due())) continue;
    ++tried;
    CHECK(leq(TropScalar(4), otimes(metric(yz, z), TropScalar(1e-9))));
  }
  CHECK(tried > 0);
}

TEST_CASE("min_flow_time rejects reducible constraint graphs") {
  CHECK_THROWS_AS(min_flow_time(TropMatrix::identity(3), std::nullopt), ReducibleMatrix);
}

TEST_CASE("solve dispatches on the objective and validates the problem") {
  ProjectProblem p;
  p.n_activities = 4;
  p.sf = fixtures::demo_sf();
  p.due = fixtures::demo_due_feasible();
  p.objective = Objective::sf_latest;
  const auto res = solve(p);
  CHECK(res.initiation == TropVector::from_ieee({6, 4, 5, 3}));

  std::string why;
  CHECK(verify(p, res, 1e-9, &why));

  ProjectProblem missing = p;
  missing.due.reset();
  CHECK_THROWS_AS(solve(missing), ValidationError);

  ProjectProblem wrong_dims = p;
  wrong_dims.due = TropVector::from_ieee({1, 2});
  CHECK_THROWS_AS(solve(wrong_dims), ValidationError);
}

TEST_CASE("verify flags inconsistent results") {
  ProjectProblem p;
  p.n_activities = 4;
  p.sf = fixtures::demo_sf();
  p.due = fixtures::demo_due_feasible();
  p.objective = Objective::sf_latest;
  auto res = solve(p);
  res.initiation = TropVector::from_ieee({0, 0, 0, 0});
  std::string why;
  CHECK(!verify(p, res, 1e-9, &why));
  CHECK(!why.empty());
}
