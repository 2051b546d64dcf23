#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace wignerwalk {

// Number of nodes on the ring. Sites are labeled 0..n-1 with periodic
// neighbors; fewer than 3 sites has no distinct left/right bond structure.
class RingSize {
 public:
  explicit RingSize(int n);
  int value() const { return n_; }

 private:
  int n_;
};

enum class DisorderKind {
  None,            // clean ring
  DD,              // diagonal (site) disorder only
  DOD,             // independent diagonal and off-diagonal (bond) disorder
  ConstrainedDOD,  // bond disorder with each site coupled to its two bonds
};

std::string to_string(DisorderKind kind);
DisorderKind disorder_kind_from_string(const std::string& name);

// Largest disorder strength the model is meant to be used with.
inline constexpr double kDeltaCap = 0.5;

enum class DeltaCap { Enforce, Ignore };

// One static disorder realization, with the strength factor delta already
// multiplied in. diag[j] perturbs site j; offdiag[j] perturbs the bond
// between sites j-1 and j (indices mod n).
struct DisorderRealization {
  std::vector<double> diag;
  std::vector<double> offdiag;
  DisorderKind kind = DisorderKind::None;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

struct HamiltonianMatrix {
  RingSize n;
  Eigen::MatrixXd entries;
};

// Clean ring Hamiltonian: 2 on the diagonal, -1 on the two periodic
// off-diagonals (hopping rate fixed at 1).
HamiltonianMatrix build_h0(RingSize n);

// Draws one realization for the given kind. All draws are standard normals
// scaled by delta, in a fixed order that is part of the reproducibility
// contract: DD fills diag[0..n-1]; DOD fills diag[0..n-1] then
// offdiag[0..n-1]; ConstrainedDOD fills offdiag[0..n-1] and derives
// diag[j] = (offdiag[j] + offdiag[j+1]) / 2, so each site perturbation is
// the mean of its two bond perturbations.
//
// delta outside [0, kDeltaCap] is rejected unless cap is DeltaCap::Ignore
// (negative delta is always rejected).
DisorderRealization sample_disorder(RingSize n, DisorderKind kind, double delta,
                                    std::uint64_t seed,
                                    DeltaCap cap = DeltaCap::Enforce);

HamiltonianMatrix build_hamiltonian(const HamiltonianMatrix& h0);

// h0 plus the perturbation: site j gains +2*diag[j] on the diagonal and the
// bond (j-1, j) gains -offdiag[j] on both symmetric entries.
HamiltonianMatrix build_hamiltonian(const HamiltonianMatrix& h0,
                                    const DisorderRealization& d);

}  // namespace wignerwalk
