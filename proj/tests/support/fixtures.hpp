#pragma once

#include <limits>

#include "maxplus/matrix.hpp"

// The worked scheduling instances used across unit, golden and acceptance
// tests (the same data as the checked-in problem files).

namespace maxplus::fixtures {

inline constexpr double Z = -std::numeric_limits<double>::infinity();

// Start-to-finish lags of the four-activity demo project.
inline TropMatrix demo_sf() {
  return TropMatrix::from_ieee({{8, 10, Z, Z}, {Z, 5, 4, 8}, {6, 12, 11, 7}, {Z, Z, Z, 12}});
}

inline TropVector demo_due_feasible() { return TropVector::from_ieee({14, 11, 16, 15}); }
inline TropVector demo_due_tight() { return TropVector::from_ieee({15, 15, 15, 15}); }

// Start-to-start lags of the same project.
inline TropMatrix demo_ss() {
  return TropMatrix::from_ieee({{0, -2, Z, Z}, {Z, 0, 3, -1}, {-1, Z, 0, -4}, {2, Z, Z, 0}});
}

inline TropVector demo_early() { return TropVector::from_ieee({1, 1, 2, 1}); }
inline TropVector demo_due_mixed() { return TropVector::from_ieee({13, 11, 15, 15}); }

// Three-activity instance for the flow-time objective.
inline TropMatrix demo_flow() {
  return TropMatrix::from_ieee({{2, 4, 4}, {2, 3, 5}, {3, 2, 3}});
}

inline TropVector demo_flow_due() { return TropVector::from_ieee({9, 8, 9}); }

// Closed-form values of the demo instances, frozen for regression checks.
inline TropMatrix demo_ss_closure() {
  return TropMatrix::from_ieee(
      {{0, -2, 1, -3}, {2, 0, 3, -1}, {-1, -3, 0, -4}, {2, 0, 3, 0}});
}

inline TropMatrix demo_ss_generators() {
  return TropMatrix::from_ieee({{-2, -3}, {0, -1}, {-3, -4}, {0, 0}});
}

inline TropMatrix demo_flow_scaled_closure() {
  return TropMatrix::from_ieee({{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}});
}

inline TropMatrix demo_flow_generators() {
  return TropMatrix::from_ieee({{1}, {1}, {0}});
}

}  // namespace maxplus::fixtures
