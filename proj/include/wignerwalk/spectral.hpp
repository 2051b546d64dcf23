#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wignerwalk/model.hpp"

namespace wignerwalk {

// Eigendecomposition of a ring Hamiltonian, plus a partition of the
// eigenvalue indices into near-degenerate groups. Groups drive the
// long-time average: only pairs within the same group survive it.
struct EigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column theta is the eigenvector for values[theta]
  std::vector<std::vector<int>> groups;  // consecutive index ranges, ascending
};

// eps_deg <= 0 selects the default tolerance 1e-9 * (spectral range).
// Adjacent eigenvalues land in the same group iff their gap is <= eps_deg.
EigenSystem eigendecompose(const HamiltonianMatrix& h, double eps_deg = 0.0);

// State exp(-iHt)|source> expressed over the sites.
struct AmplitudeVector {
  Eigen::VectorXcd amps;
  int source = 0;
  double time = 0.0;
};

AmplitudeVector propagate(const EigenSystem& es, int source, double t);

// Born-rule site probabilities |amps|^2.
Eigen::VectorXd transition_probability(const AmplitudeVector& a);

}  // namespace wignerwalk
