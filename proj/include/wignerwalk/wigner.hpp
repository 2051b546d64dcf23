#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "wignerwalk/model.hpp"
#include "wignerwalk/spectral.hpp"

namespace wignerwalk {

// Largest imaginary residue tolerated when a phase-space sum that is real
// by symmetry is evaluated numerically. Exceeding it means the inputs were
// inconsistent, so it is an error rather than something to round away.
inline constexpr double kRealnessTol = 1e-10;

struct GridMeta {
  int n = 0;
  int source = 0;                   // starting site j
  std::optional<double> time;       // empty means long-time average
  DisorderKind kind = DisorderKind::None;
  double delta = 0.0;
  std::uint64_t seed = 0;
  int realizations = 1;
};

// Discrete phase-space distribution on the n x n grid of position x
// (rows) and momentum index kappa (columns). Entries are real and sum to 1;
// negative values are genuine interference signatures.
struct PhaseSpaceGrid {
  Eigen::MatrixXd w;
  GridMeta meta;
};

// W(x, kappa) = Re[(1/n) sum_y e^{i 2 pi kappa y / n}
//                          amps(x-y) conj(amps(x+y))], indices mod n.
// The y <-> n-y pairing makes the sum real; the residue is checked against
// kRealnessTol.
PhaseSpaceGrid wigner_snapshot(const AmplitudeVector& a);

// Closed form for the clean ring, built directly from the plane-wave
// (Bloch) eigenbasis without an eigensolver. Agrees with
// wigner_snapshot(propagate(...)) on the clean ring and serves as its
// cross-check.
PhaseSpaceGrid wigner_bloch(RingSize n, int source, double t);

// Exact t -> infinity time average: oscillating eigenvalue-pair terms drop
// out and only pairs inside the same degeneracy group survive. Independent
// of the eigenvector basis chosen within each group.
PhaseSpaceGrid wigner_longtime(const EigenSystem& es, int source);

// Trapezoid average of snapshots at n_samples equispaced times on
// [0, t_max]. Converges to wigner_longtime as t_max grows; mainly a
// diagnostic for the exact average.
PhaseSpaceGrid finite_time_average(const EigenSystem& es, int source,
                                   double t_max, int n_samples);

// Row sums: site occupation probabilities pi_x.
Eigen::VectorXd marginal_position(const PhaseSpaceGrid& g);

// Column sums: momentum occupation probabilities.
Eigen::VectorXd marginal_momentum(const PhaseSpaceGrid& g);

}  // namespace wignerwalk
