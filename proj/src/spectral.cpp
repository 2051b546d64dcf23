#include "wignerwalk/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wignerwalk {

EigenSystem eigendecompose(const HamiltonianMatrix& h, double eps_deg) {
  const Eigen::MatrixXd& m = h.entries;
  if (!m.allFinite()) {
    throw std::invalid_argument("hamiltonian has non-finite entries");
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument("hamiltonian is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }

  EigenSystem es;
  es.values = solver.eigenvalues();  // ascending
  es.vectors = solver.eigenvectors();

  const int size = static_cast<int>(es.values.size());
  double eps = eps_deg;
  if (eps <= 0.0) {
    eps = 1e-9 * (es.values(size - 1) - es.values(0));
  }

  es.groups.push_back({0});
  for (int theta = 1; theta < size; ++theta) {
    if (es.values(theta) - es.values(theta - 1) <= eps) {
      es.groups.back().push_back(theta);
    } else {
      es.groups.push_back({theta});
    }
  }
  return es;
}

AmplitudeVector propagate(const EigenSystem& es, int source, double t) {
  const int size = static_cast<int>(es.values.size());
  if (source < 0 || source >= size) {
    throw std::invalid_argument("source site " + std::to_string(source) +
                                " outside ring of size " + std::to_string(size));
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("time must be nonnegative");
  }

  // amps = V diag(e^{-i E t}) V^T e_source, evaluated with two real
  // matrix-vector products instead of a complex one.
  const Eigen::VectorXd coeff = es.vectors.row(source).transpose();
  const Eigen::ArrayXd angle = es.values.array() * t;
  const Eigen::VectorXd wr = (coeff.array() * angle.cos()).matrix();
  const Eigen::VectorXd wi = (-coeff.array() * angle.sin()).matrix();

  AmplitudeVector a;
  a.amps.resize(size);
  a.amps.real() = es.vectors * wr;
  a.amps.imag() = es.vectors * wi;
  a.source = source;
  a.time = t;

  const double norm_dev = std::abs(a.amps.squaredNorm() - 1.0);
  if (norm_dev > 1e-10) {
    throw std::runtime_error("propagated state lost normalization (dev " +
                             std::to_string(norm_dev) + ")");
  }
  return a;
}

Eigen::VectorXd transition_probability(const AmplitudeVector& a) {
  return a.amps.cwiseAbs2();
}

}  // namespace wignerwalk
