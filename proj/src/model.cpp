#include "wignerwalk/model.hpp"

#include <cmath>
#include <stdexcept>

#include "wignerwalk/rng.hpp"

namespace wignerwalk {

RingSize::RingSize(int n) : n_(n) {
  if (n < 3) {
    throw std::invalid_argument("ring size must be at least 3, got " +
                                std::to_string(n));
  }
}

std::string to_string(DisorderKind kind) {
  switch (kind) {
    case DisorderKind::None: return "none";
    case DisorderKind::DD: return "dd";
    case DisorderKind::DOD: return "dod";
    case DisorderKind::ConstrainedDOD: return "cdod";
  }
  throw std::invalid_argument("unknown disorder kind");
}

DisorderKind disorder_kind_from_string(const std::string& name) {
  if (name == "none") return DisorderKind::None;
  if (name == "dd") return DisorderKind::DD;
  if (name == "dod") return DisorderKind::DOD;
  if (name == "cdod") return DisorderKind::ConstrainedDOD;
  throw std::invalid_argument("unknown disorder kind '" + name +
                              "' (expected none, dd, dod or cdod)");
}

HamiltonianMatrix build_h0(RingSize n) {
  const int size = n.value();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
  for (int j = 0; j < size; ++j) {
    h(j, j) = 2.0;
    h(j, (j + 1) % size) = -1.0;
    h(j, (j + size - 1) % size) = -1.0;
  }
  return {n, std::move(h)};
}

DisorderRealization sample_disorder(RingSize n, DisorderKind kind, double delta,
                                    std::uint64_t seed, DeltaCap cap) {
  if (kind == DisorderKind::None) {
    throw std::invalid_argument("sample_disorder needs an active disorder kind");
  }
  if (!(delta >= 0.0)) {
    throw std::invalid_argument("disorder strength must be nonnegative");
  }
  if (cap == DeltaCap::Enforce && delta > kDeltaCap) {
    throw std::invalid_argument("disorder strength " + std::to_string(delta) +
                                " exceeds the cap " + std::to_string(kDeltaCap));
  }

  const int size = n.value();
  DisorderRealization d;
  d.diag.assign(size, 0.0);
  d.offdiag.assign(size, 0.0);
  d.kind = kind;
  d.delta = delta;
  d.seed = seed;

  NormalSampler normals(seed);
  switch (kind) {
    case DisorderKind::DD:
      for (int j = 0; j < size; ++j) d.diag[j] = delta * normals.next();
      break;
    case DisorderKind::DOD:
      for (int j = 0; j < size; ++j) d.diag[j] = delta * normals.next();
      for (int j = 0; j < size; ++j) d.offdiag[j] = delta * normals.next();
      break;
    case DisorderKind::ConstrainedDOD:
      for (int j = 0; j < size; ++j) d.offdiag[j] = delta * normals.next();
      for (int j = 0; j < size; ++j) {
        d.diag[j] = 0.5 * (d.offdiag[j] + d.offdiag[(j + 1) % size]);
      }
      break;
    case DisorderKind::None:
      break;
  }
  return d;
}

HamiltonianMatrix build_hamiltonian(const HamiltonianMatrix& h0) { return h0; }

HamiltonianMatrix build_hamiltonian(const HamiltonianMatrix& h0,
                                    const DisorderRealization& d) {
  const int size = h0.n.value();
  if (static_cast<int>(d.diag.size()) != size ||
      static_cast<int>(d.offdiag.size()) != size) {
    throw std::invalid_argument("disorder realization size does not match ring");
  }
  HamiltonianMatrix h = h0;
  for (int j = 0; j < size; ++j) {
    h.entries(j, j) += 2.0 * d.diag[j];
    const int prev = (j + size - 1) % size;
    h.entries(j, prev) -= d.offdiag[j];
    h.entries(prev, j) = h.entries(j, prev);  // keep symmetry exact
  }
  return h;
}

}  // namespace wignerwalk
