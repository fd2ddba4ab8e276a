#pragma once

// Position, momentum and Hamiltonian operators of an N-particle
// D-dimensional oscillator built from an assigned CAO set, in complex
// double precision, and the Hamilton = Heisenberg operator identities.

#include <Eigen/Dense>
#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include "wqo/cao.hpp"
#include "wqo/exec.hpp"
#include "wqo/verifier.hpp"

namespace wqo {

using CMatrix = Eigen::MatrixXcd;

struct PhysParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  int mu = 1;

  void validate() const;
  /// mu and c chosen so that -mu*c = lambda.
  static PhysParams from_cc(const CcResult& cc, double mass = 1.0, double omega = 1.0, double hbar = 1.0);
};

nlohmann::json to_json(const PhysParams& p);

struct AssignedOperators {
  int N = 0;
  int D = 0;
  // All arrays are indexed flat: (alpha-1)*D + (j-1).
  std::vector<CaoLabel> source;
  std::vector<CMatrix> a_plus, a_minus, R, P;
  CMatrix H, H_prime;

  std::size_t flat(int alpha, int j) const { return static_cast<std::size_t>((alpha - 1) * D + (j - 1)); }
};

CMatrix to_complex(const SuperMatrix& a);

/// bijection[flat(alpha, j)] is the pair index assigned to (alpha, j);
/// default is row-major label order. Throws std::invalid_argument when
/// N*D != M or the bijection is not a permutation.
AssignedOperators assign_nd(const CaoSet& caos, int N, int D,
                            const std::optional<std::vector<std::size_t>>& bijection = std::nullopt);

/// R = sqrt(hbar/(c m w)) (a+ + a-),  P = -i mu sqrt(m w hbar/c) (a+ - a-).
AssignedOperators build_rp(AssignedOperators ops, const PhysParams& p);

/// Max-entry error of a+- reconstructed from R, P, relative to max |a+-|.
double ladder_residual(const AssignedOperators& ops, const PhysParams& p);

struct HamiltonianMismatch : std::runtime_error {
  HamiltonianMismatch(CMatrix h, CMatrix h_prime, double gap);
  CMatrix H, H_prime;
  double gap;
};

/// H = (w hbar/c) sum {a+, a-} and H' = sum P^2/(2m) + m w^2 R^2/2. Throws
/// HamiltonianMismatch when max|H - H'| > 1e-10 max|H|.
AssignedOperators build_h(AssignedOperators ops, const PhysParams& p);

double max_abs(const CMatrix& a);

struct CcResidual {
  double max = 0.0;
  std::size_t worst = 0;  // flat (alpha, j)
  bool worst_is_momentum = false;
};

/// Worst entry of [H, P] - i hbar m w^2 R and [H, R] + (i hbar/m) P.
CcResidual cc_residual(const AssignedOperators& ops, const PhysParams& p, Exec exec = Exec::parallel);

CheckReport check_hamilton_heisenberg(const AssignedOperators& ops, const PhysParams& p, double tol,
                                      Exec exec = Exec::parallel);

/// Informational: whether (x+_rk)^dagger = x-_rk for every pair.
CheckReport dagger_report(const CaoSet& caos);

/// Eigenvalues of H, sorted by real part, as a short text note.
std::string h_eigen_note(const CMatrix& H);

}  // namespace wqo
