#include "wignerwalk/ensemble.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "wignerwalk/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wignerwalk {

namespace {

// Per-cell compensated (Kahan) accumulator. The fold order is fixed by the
// caller, so identical inputs in identical order give identical bits no
// matter how the per-realization work was scheduled.
struct KahanGrid {
  Eigen::MatrixXd sum;
  Eigen::MatrixXd comp;

  explicit KahanGrid(int size)
      : sum(Eigen::MatrixXd::Zero(size, size)),
        comp(Eigen::MatrixXd::Zero(size, size)) {}

  void add(const Eigen::MatrixXd& v) {
    const Eigen::MatrixXd y = v - comp;
    const Eigen::MatrixXd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  Eigen::MatrixXd mean(int count) const { return sum / count; }
};

struct RealizationOutput {
  std::vector<Eigen::MatrixXd> snapshots;
  Eigen::MatrixXd longtime;
};

RealizationOutput compute_realization(const EnsembleSpec& spec,
                                      const HamiltonianMatrix& h0, int r,
                                      bool with_snapshots, bool with_longtime) {
  HamiltonianMatrix h = h0;
  if (spec.kind != DisorderKind::None) {
    const DisorderRealization d =
        sample_disorder(spec.n, spec.kind, spec.delta,
                        spec.base_seed + static_cast<std::uint64_t>(r), spec.cap);
    h = build_hamiltonian(h0, d);
  }
  const EigenSystem es = eigendecompose(h, spec.eps_deg);

  RealizationOutput out;
  if (with_snapshots) {
    out.snapshots.reserve(spec.times.size());
    for (double t : spec.times) {
      out.snapshots.push_back(wigner_snapshot(propagate(es, spec.source, t)).w);
    }
  }
  if (with_longtime) {
    out.longtime = wigner_longtime(es, spec.source).w;
  }
  return out;
}

int effective_workers(const SweepOptions& opts) {
  int workers = opts.workers;
  if (workers <= 0) {
#ifdef _OPENMP
    workers = omp_get_max_threads();
#else
    workers = 1;
#endif
  }
  if (const char* env = std::getenv("WIGNERWALK_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, cap);
  }
  return std::max(workers, 1);
}

void validate_spec(const EnsembleSpec& spec, bool with_snapshots) {
  const int size = spec.n.value();
  if (spec.source < 0 || spec.source >= size) {
    throw std::invalid_argument("source site outside ring");
  }
  if (!(spec.delta >= 0.0)) {
    throw std::invalid_argument("ensemble disorder strength must be nonnegative");
  }
  if (spec.cap == DeltaCap::Enforce && spec.delta > kDeltaCap) {
    throw std::invalid_argument("ensemble disorder strength exceeds the cap 0.5");
  }
  if (spec.realizations < 1) {
    throw std::invalid_argument("ensemble needs at least one realization");
  }
  if (with_snapshots) {
    if (spec.times.empty()) {
      throw std::invalid_argument("snapshot ensemble needs at least one time");
    }
    for (double t : spec.times) {
      if (!(t >= 0.0)) throw std::invalid_argument("snapshot times must be nonnegative");
    }
  }
}

}  // namespace

EnsembleResult ensemble_sweep(const EnsembleSpec& spec, bool with_snapshots,
                              bool with_longtime, const SweepOptions& opts) {
  validate_spec(spec, with_snapshots);
  if (!with_snapshots && !with_longtime) {
    throw std::invalid_argument("ensemble sweep with nothing to compute");
  }

  const int size = spec.n.value();
  const int total = spec.realizations;
  const HamiltonianMatrix h0 = build_h0(spec.n);
  const std::size_t n_snap = with_snapshots ? spec.times.size() : 0;

  std::vector<KahanGrid> snap_acc(n_snap, KahanGrid(size));
  std::optional<KahanGrid> long_acc;
  if (with_longtime) long_acc.emplace(size);

  const auto fold = [&](const RealizationOutput& out, int r) {
    for (std::size_t i = 0; i < n_snap; ++i) snap_acc[i].add(out.snapshots[i]);
    if (long_acc) long_acc->add(out.longtime);
    if (opts.progress) {
      opts.progress(static_cast<std::size_t>(r) + 1,
                    static_cast<std::size_t>(total));
    }
  };

  const int workers = effective_workers(opts);
  if (opts.serial_reference || workers <= 1) {
    for (int r = 0; r < total; ++r) {
      fold(compute_realization(spec, h0, r, with_snapshots, with_longtime), r);
    }
  } else {
    // Blocked sweep: a block of realizations is computed in parallel into
    // slots, then folded serially in realization order. Only the schedule
    // differs from the serial reference, never the arithmetic.
    const int block = std::min(total, workers * 4);
    std::vector<RealizationOutput> slot(block);
    std::vector<std::string> errors(block);
    for (int start = 0; start < total; start += block) {
      const int count = std::min(block, total - start);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
      for (int i = 0; i < count; ++i) {
        try {
          slot[i] = compute_realization(spec, h0, start + i, with_snapshots,
                                        with_longtime);
          errors[i].clear();
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
      for (int i = 0; i < count; ++i) {
        if (!errors[i].empty()) {
          throw std::runtime_error("realization " + std::to_string(start + i) +
                                   " failed: " + errors[i]);
        }
        fold(slot[i], start + i);
      }
    }
  }

  EnsembleResult res{{}, std::nullopt, total, spec};
  GridMeta meta;
  meta.n = size;
  meta.source = spec.source;
  meta.kind = spec.kind;
  meta.delta = spec.kind == DisorderKind::None ? 0.0 : spec.delta;
  meta.seed = spec.base_seed;
  meta.realizations = total;
  for (std::size_t i = 0; i < n_snap; ++i) {
    meta.time = spec.times[i];
    res.snapshots.push_back({snap_acc[i].mean(total), meta});
  }
  if (long_acc) {
    meta.time = std::nullopt;
    res.longtime = PhaseSpaceGrid{long_acc->mean(total), meta};
  }
  return res;
}

EnsembleResult ensemble_snapshot(const EnsembleSpec& spec,
                                 const SweepOptions& opts) {
  return ensemble_sweep(spec, true, false, opts);
}

EnsembleResult ensemble_longtime(const EnsembleSpec& spec,
                                 const SweepOptions& opts) {
  return ensemble_sweep(spec, false, true, opts);
}

InterchangeReport verify_interchange(const EnsembleSpec& spec, double t_max,
                                     int n_samples) {
  validate_spec(spec, false);
  if (spec.n.value() > 31 || spec.realizations > 50) {
    throw std::invalid_argument(
        "interchange check is a diagnostic; use n <= 31 and realizations <= 50");
  }
  if (n_samples < 2) {
    throw std::invalid_argument("interchange check needs at least 2 samples");
  }
  if (!(t_max >= 0.0)) {
    throw std::invalid_argument("t_max must be nonnegative");
  }

  const int size = spec.n.value();
  const int total = spec.realizations;
  const HamiltonianMatrix h0 = build_h0(spec.n);
  const double dt = t_max / (n_samples - 1);
  const auto weight = [&](int s) {
    return (s == 0 || s == n_samples - 1) ? 0.5 : 1.0;
  };

  // Every sampled grid is computed exactly once and fed to both routes, so
  // any deviation comes from the order of averaging alone.
  KahanGrid realization_mean(size);               // route A: time first
  std::vector<KahanGrid> time_acc(n_samples, KahanGrid(size));  // route B
  for (int r = 0; r < total; ++r) {
    HamiltonianMatrix h = h0;
    if (spec.kind != DisorderKind::None) {
      h = build_hamiltonian(
          h0,
          sample_disorder(spec.n, spec.kind, spec.delta,
                          spec.base_seed + static_cast<std::uint64_t>(r), spec.cap));
    }
    const EigenSystem es = eigendecompose(h, spec.eps_deg);
    Eigen::MatrixXd trapezoid = Eigen::MatrixXd::Zero(size, size);
    for (int s = 0; s < n_samples; ++s) {
      const Eigen::MatrixXd g =
          wigner_snapshot(propagate(es, spec.source, dt * s)).w;
      trapezoid += weight(s) * g;
      time_acc[s].add(g);
    }
    realization_mean.add(trapezoid / (n_samples - 1));
  }

  const Eigen::MatrixXd route_a = realization_mean.mean(total);
  Eigen::MatrixXd route_b = Eigen::MatrixXd::Zero(size, size);
  for (int s = 0; s < n_samples; ++s) {
    route_b += weight(s) * time_acc[s].mean(total);
  }
  route_b /= n_samples - 1;

  return {(route_a - route_b).cwiseAbs().maxCoeff()};
}

}  // namespace wignerwalk
