#pragma once

// Independent reference implementations used only by tests. Each one
// recomputes a quantity the library produces, along a different route, so
// agreement is evidence rather than tautology.

#include <Eigen/Dense>

#include "wignerwalk/spectral.hpp"

namespace oracles {

// Plane-wave dispersion of the clean ring: 2 - 2 cos(2 pi theta / n).
double bloch_eigenvalue(int n, int theta);

// Fixed-step classic Runge-Kutta integration of i dpsi/dt = H psi starting
// from site `source`, applied to the Hamiltonian matrix directly. Never
// touches an eigensolver.
Eigen::VectorXcd rk4_propagate(const Eigen::MatrixXd& h, int source,
                               double t_end, double dt);

// Literal five-fold sum over (x, kappa, y, theta, theta') defining the
// phase-space distribution in the eigenbasis. O(n^5), so n <= 25.
Eigen::MatrixXd wigner_direct_spectral(const wignerwalk::EigenSystem& es,
                                       int source, double t);

// Exact long-time grids of the clean ring, written out case by case.
// Odd n: 1/n^2 on every kappa != 0 column, a single 1/n peak at
// (x=source, kappa=0), zero elsewhere.
Eigen::MatrixXd limiting_grid_odd(int n, int source);

// Even n: 2/n^2 on even kappa != 0 columns, zero on odd columns, and
// 1/n peaks at (source, 0) and (source + n/2, 0).
Eigen::MatrixXd limiting_grid_even(int n, int source);

}  // namespace oracles
