#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wignerwalk/model.hpp"
#include "wignerwalk/wigner.hpp"

namespace wignerwalk {

struct EnsembleSpec {
  RingSize n;
  int source = 0;
  DisorderKind kind = DisorderKind::None;
  double delta = 0.0;
  int realizations = 1;
  std::uint64_t base_seed = 0;
  std::vector<double> times;  // snapshot times; may be empty for longtime-only runs
  double eps_deg = 0.0;       // 0 selects the eigendecompose default
  DeltaCap cap = DeltaCap::Enforce;
};

struct EnsembleResult {
  std::vector<PhaseSpaceGrid> snapshots;  // aligned with spec.times
  std::optional<PhaseSpaceGrid> longtime;
  int r_completed = 0;
  EnsembleSpec spec;
};

struct SweepOptions {
  // 0 means all available threads. The WIGNERWALK_THREADS environment
  // variable caps the effective count either way.
  int workers = 0;
  // Forces the plain single-threaded sweep. Kept as the reference
  // implementation the parallel path must match bit for bit.
  bool serial_reference = false;
  // Called after each realization is folded in, as (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

// Averages per-realization grids over realizations r = 0..R-1, where
// realization r is seeded with base_seed + r. Work is farmed out in blocks,
// but folding into the accumulators always happens in realization order
// with compensated summation, so the result is byte-identical for any
// worker count, including the serial reference. A failed realization aborts
// the ensemble with its index in the error.
EnsembleResult ensemble_sweep(const EnsembleSpec& spec, bool with_snapshots,
                              bool with_longtime,
                              const SweepOptions& opts = {});

// ensemble_sweep restricted to snapshots (times must be nonempty).
EnsembleResult ensemble_snapshot(const EnsembleSpec& spec,
                                 const SweepOptions& opts = {});

// ensemble_sweep restricted to the exact long-time average.
EnsembleResult ensemble_longtime(const EnsembleSpec& spec,
                                 const SweepOptions& opts = {});

struct InterchangeReport {
  double max_dev = 0.0;
};

// Checks that finite-time averaging and ensemble averaging commute: the
// ensemble mean of per-realization trapezoid averages is compared against
// the trapezoid average of per-time ensemble means, over the same sampled
// grids. The deviation is pure summation-ordering noise. Restricted to
// small instances (n <= 31, realizations <= 50) since it is a diagnostic.
InterchangeReport verify_interchange(const EnsembleSpec& spec, double t_max,
                                     int n_samples);

}  // namespace wignerwalk
