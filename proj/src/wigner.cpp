#include "wignerwalk/wigner.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wignerwalk {

namespace {

std::vector<std::complex<double>> unit_roots(int size) {
  std::vector<std::complex<double>> roots(size);
  for (int m = 0; m < size; ++m) {
    roots[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / size);
  }
  return roots;
}

// Shared core of the snapshot and long-time grids:
//   w(x, k) = Re[(1/n) sum_y roots[k y mod n] * P((x-y) mod n, (x+y) mod n)].
// For both callers P(u, v) pairs the y and n-y terms into conjugates, so the
// imaginary parts cancel analytically; a residue above kRealnessTol means P
// was inconsistent and is reported instead of silently dropped.
Eigen::MatrixXd phase_space_transform(const Eigen::MatrixXcd& products) {
  const int size = static_cast<int>(products.rows());
  const auto roots = unit_roots(size);
  Eigen::MatrixXd w(size, size);
  std::vector<std::complex<double>> line(size);
  double max_residue = 0.0;

  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      line[y] = products((x - y + size) % size, (x + y) % size);
    }
    for (int k = 0; k < size; ++k) {
      std::complex<double> acc = 0.0;
      for (int y = 0; y < size; ++y) {
        acc += roots[static_cast<int>((static_cast<long long>(k) * y) % size)] *
               line[y];
      }
      const double value = acc.real() / size;
      const double residue = std::abs(acc.imag()) / size;
      if (residue > max_residue) max_residue = residue;
      w(x, k) = value;
    }
  }

  if (max_residue > kRealnessTol) {
    throw std::runtime_error(
        "phase-space transform has imaginary residue " +
        std::to_string(max_residue) + "; input products are inconsistent");
  }
  return w;
}

void check_source(int source, int size) {
  if (source < 0 || source >= size) {
    throw std::invalid_argument("source site " + std::to_string(source) +
                                " outside ring of size " + std::to_string(size));
  }
}

}  // namespace

PhaseSpaceGrid wigner_snapshot(const AmplitudeVector& a) {
  const int size = static_cast<int>(a.amps.size());
  const Eigen::MatrixXcd products = a.amps * a.amps.adjoint();
  GridMeta meta;
  meta.n = size;
  meta.source = a.source;
  meta.time = a.time;
  return {phase_space_transform(products), meta};
}

PhaseSpaceGrid wigner_bloch(RingSize n, int source, double t) {
  const int size = n.value();
  check_source(source, size);
  if (!(t >= 0.0)) {
    throw std::invalid_argument("time must be nonnegative");
  }

  const auto roots = unit_roots(size);
  std::vector<double> band(size);  // band[m] = cos(2 pi m / n)
  for (int m = 0; m < size; ++m) {
    band[m] = std::cos(2.0 * std::numbers::pi * m / size);
  }

  // Plane-wave expansion of the clean-ring snapshot:
  //   w(x, k) = Re[(1/n^2) sum_m e^{-i 2 pi (2m+k)(x-j)/n}
  //                        e^{-i 2 t (band[(m+k) mod n] - band[m])}].
  Eigen::MatrixXd w(size, size);
  std::vector<std::complex<double>> osc(size);
  for (int k = 0; k < size; ++k) {
    for (int m = 0; m < size; ++m) {
      osc[m] = std::polar(1.0, -2.0 * t * (band[(m + k) % size] - band[m]));
    }
    for (int x = 0; x < size; ++x) {
      const long long dist = x - source;
      std::complex<double> acc = 0.0;
      for (int m = 0; m < size; ++m) {
        long long e = ((2LL * m + k) * dist) % size;
        if (e < 0) e += size;
        acc += std::conj(roots[static_cast<int>(e)]) * osc[m];
      }
      w(x, k) = acc.real() / (static_cast<double>(size) * size);
    }
  }

  GridMeta meta;
  meta.n = size;
  meta.source = source;
  meta.time = t;
  return {std::move(w), meta};
}

PhaseSpaceGrid wigner_longtime(const EigenSystem& es, int source) {
  const int size = static_cast<int>(es.values.size());
  check_source(source, size);

  // Per-group amplitude a_g(z) = sum_{theta in g} V(z, theta) V(source, theta).
  // Summing the projector over a whole degeneracy group makes the result
  // independent of the eigenvector basis chosen inside the group.
  const int n_groups = static_cast<int>(es.groups.size());
  Eigen::MatrixXd group_amp = Eigen::MatrixXd::Zero(size, n_groups);
  for (int g = 0; g < n_groups; ++g) {
    for (int theta : es.groups[g]) {
      group_amp.col(g) += es.vectors.col(theta) * es.vectors(source, theta);
    }
  }

  // Time-averaging kills every cross-group (oscillating) pair, leaving
  // B(u, v) = sum_g a_g(u) a_g(v) as the surviving correlation kernel.
  const Eigen::MatrixXd products = group_amp * group_amp.transpose();

  GridMeta meta;
  meta.n = size;
  meta.source = source;
  meta.time = std::nullopt;
  return {phase_space_transform(products.cast<std::complex<double>>()), meta};
}

PhaseSpaceGrid finite_time_average(const EigenSystem& es, int source,
                                   double t_max, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("finite_time_average needs at least 2 samples");
  }
  if (!(t_max >= 0.0)) {
    throw std::invalid_argument("t_max must be nonnegative");
  }

  const int size = static_cast<int>(es.values.size());
  const double dt = t_max / (n_samples - 1);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < n_samples; ++i) {
    const PhaseSpaceGrid g = wigner_snapshot(propagate(es, source, dt * i));
    const double weight = (i == 0 || i == n_samples - 1) ? 0.5 : 1.0;
    sum += weight * g.w;
  }

  GridMeta meta;
  meta.n = size;
  meta.source = source;
  meta.time = std::nullopt;
  return {sum / (n_samples - 1), meta};
}

Eigen::VectorXd marginal_position(const PhaseSpaceGrid& g) {
  return g.w.rowwise().sum();
}

Eigen::VectorXd marginal_momentum(const PhaseSpaceGrid& g) {
  return g.w.colwise().sum().transpose();
}

}  // namespace wignerwalk
