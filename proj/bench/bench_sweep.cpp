// Times the serial reference sweep against the OpenMP sweep on identical
// work and checks that the two produce bit-identical ensembles.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "wignerwalk/ensemble.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  wignerwalk::EnsembleResult result;
  double ms = 0.0;
};

Timed run_timed(const wignerwalk::EnsembleSpec& spec,
                const wignerwalk::SweepOptions& opts) {
  const auto start = Clock::now();
  wignerwalk::EnsembleResult out =
      wignerwalk::ensemble_sweep(spec, !spec.times.empty(), true, opts);
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return {std::move(out), ms};
}

bool identical(const wignerwalk::EnsembleResult& a,
               const wignerwalk::EnsembleResult& b) {
  if (a.snapshots.size() != b.snapshots.size()) return false;
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    if (!(a.snapshots[i].w.array() == b.snapshots[i].w.array()).all()) return false;
  }
  if (a.longtime.has_value() != b.longtime.has_value()) return false;
  if (a.longtime && !(a.longtime->w.array() == b.longtime->w.array()).all()) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial-vs-OpenMP ensemble sweep benchmark", "wigner_bench"};
  int n = 101;
  int realizations = 64;
  int threads = 0;
  double delta = 0.5;
  std::string kind_name = "dod";
  std::vector<double> times = {1, 40};
  app.add_option("--n", n, "ring size")->check(CLI::Range(3, 100000));
  app.add_option("--r", realizations, "realizations")->check(CLI::PositiveNumber);
  app.add_option("--delta", delta, "disorder strength")
      ->check(CLI::Range(0.0, 0.5));
  app.add_option("--kind", kind_name, "disorder kind: dd, dod, cdod");
  app.add_option("--threads", threads, "OpenMP workers (default: all)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--times", times, "snapshot times")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  wignerwalk::EnsembleSpec spec{wignerwalk::RingSize(n),
                                n / 2,
                                wignerwalk::disorder_kind_from_string(kind_name),
                                delta,
                                realizations,
                                7,
                                times};

  wignerwalk::SweepOptions serial;
  serial.serial_reference = true;
  wignerwalk::SweepOptions parallel;
  parallel.workers = threads;

#ifdef _OPENMP
  const int max_threads = threads > 0 ? threads : omp_get_max_threads();
#else
  const int max_threads = 1;
#endif

  const Timed ref = run_timed(spec, serial);
  const Timed par = run_timed(spec, parallel);
  const bool match = identical(ref.result, par.result);

  std::printf("ensemble sweep: n=%d r=%d kind=%s delta=%g snapshots=%zu+longtime\n",
              n, realizations, kind_name.c_str(), delta, times.size());
  std::printf("  serial reference : %10.1f ms\n", ref.ms);
  std::printf("  openmp (%2d thr)  : %10.1f ms   speedup %.2fx\n", max_threads,
              par.ms, ref.ms / par.ms);
  std::printf("  bit-identical    : %s\n", match ? "yes" : "NO");
  return match ? 0 : 1;
}
