#include "wqo/physics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace wqo {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

void PhysParams::validate() const {
  if (!(mass > 0 && omega > 0 && hbar > 0 && c > 0))
    throw std::invalid_argument("mass, omega, hbar and c must be strictly positive");
  if (mu != 1 && mu != -1) throw std::invalid_argument("mu must be +1 or -1");
}

PhysParams PhysParams::from_cc(const CcResult& cc, double mass, double omega, double hbar) {
  if (!cc.usable) throw std::invalid_argument("compatibility scalar is unusable (lambda = 0 or inconsistent)");
  return {mass, omega, hbar, cc.c.to_double(), cc.mu};
}

nlohmann::json to_json(const PhysParams& p) {
  return {{"mass", p.mass}, {"omega", p.omega}, {"hbar", p.hbar}, {"c", p.c}, {"mu", p.mu}};
}

CMatrix to_complex(const SuperMatrix& a) {
  const int n = a.dim().size();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& [ij, v] : a.entries()) out(ij.first - 1, ij.second - 1) = rad_to_float(v);
  return out;
}

AssignedOperators assign_nd(const CaoSet& caos, int N, int D, const std::optional<std::vector<std::size_t>>& bijection) {
  if (N < 1 || D < 1) throw std::invalid_argument("N and D must be >= 1");
  const std::size_t M = caos.size();
  if (static_cast<std::size_t>(N) * static_cast<std::size_t>(D) != M)
    throw std::invalid_argument("N*D = " + std::to_string(N * D) + " does not match M = " + std::to_string(M));

  std::vector<std::size_t> order(M);
  for (std::size_t i = 0; i < M; ++i) order[i] = i;
  if (bijection) {
    if (bijection->size() != M) throw std::invalid_argument("bijection must list all M labels");
    std::vector<std::size_t> sorted = *bijection;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) throw std::invalid_argument("bijection is not a permutation of the labels");
    order = *bijection;
  }

  AssignedOperators ops;
  ops.N = N;
  ops.D = D;
  for (std::size_t f = 0; f < M; ++f) {
    const auto& pr = caos.pairs[order[f]];
    ops.source.push_back(pr.label);
    ops.a_plus.push_back(to_complex(pr.plus));
    ops.a_minus.push_back(to_complex(pr.minus));
  }
  return ops;
}

AssignedOperators build_rp(AssignedOperators ops, const PhysParams& p) {
  p.validate();
  const double r_scale = std::sqrt(p.hbar / (p.c * p.mass * p.omega));
  const std::complex<double> p_scale = -kI * static_cast<double>(p.mu) * std::sqrt(p.mass * p.omega * p.hbar / p.c);
  ops.R.clear();
  ops.P.clear();
  for (std::size_t f = 0; f < ops.a_plus.size(); ++f) {
    ops.R.push_back(r_scale * (ops.a_plus[f] + ops.a_minus[f]));
    ops.P.push_back(p_scale * (ops.a_plus[f] - ops.a_minus[f]));
  }
  return ops;
}

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double ladder_residual(const AssignedOperators& ops, const PhysParams& p) {
  const double r_coeff = std::sqrt(p.c * p.mass * p.omega / (4 * p.hbar));
  const std::complex<double> p_coeff = kI * static_cast<double>(p.mu) * std::sqrt(p.c / (4 * p.mass * p.omega * p.hbar));
  double worst = 0.0;
  for (std::size_t f = 0; f < ops.a_plus.size(); ++f) {
    const double scale = std::max({max_abs(ops.a_plus[f]), max_abs(ops.a_minus[f]), 1e-300});
    const CMatrix plus = r_coeff * ops.R[f] + p_coeff * ops.P[f];
    const CMatrix minus = r_coeff * ops.R[f] - p_coeff * ops.P[f];
    worst = std::max({worst, max_abs(plus - ops.a_plus[f]) / scale, max_abs(minus - ops.a_minus[f]) / scale});
  }
  return worst;
}

HamiltonianMismatch::HamiltonianMismatch(CMatrix h, CMatrix h_prime, double g)
    : std::runtime_error("H in ladder form and H in R,P form differ by " + std::to_string(g)),
      H(std::move(h)),
      H_prime(std::move(h_prime)),
      gap(g) {}

AssignedOperators build_h(AssignedOperators ops, const PhysParams& p) {
  p.validate();
  if (ops.R.size() != ops.a_plus.size()) throw std::invalid_argument("build_h needs R and P; call build_rp first");
  const auto n = ops.a_plus.front().rows();
  CMatrix ladder = CMatrix::Zero(n, n);
  CMatrix kinetic = CMatrix::Zero(n, n);
  CMatrix potential = CMatrix::Zero(n, n);
  for (std::size_t f = 0; f < ops.a_plus.size(); ++f) {
    ladder += ops.a_plus[f] * ops.a_minus[f] + ops.a_minus[f] * ops.a_plus[f];
    kinetic += ops.P[f] * ops.P[f];
    potential += ops.R[f] * ops.R[f];
  }
  ops.H = (p.omega * p.hbar / p.c) * ladder;
  ops.H_prime = kinetic / (2 * p.mass) + (p.mass * p.omega * p.omega / 2) * potential;
  const double gap = max_abs(ops.H - ops.H_prime);
  if (gap > 1e-10 * max_abs(ops.H)) throw HamiltonianMismatch(ops.H, ops.H_prime, gap);
  return ops;
}

CcResidual cc_residual(const AssignedOperators& ops, const PhysParams& p, Exec exec) {
  const std::size_t count = ops.R.size();
  // Entry 2f: momentum identity for (alpha, j) = f; entry 2f+1: position identity.
  const auto res = generate_indexed<double>(count * 2, exec, [&](std::size_t i) {
    const std::size_t f = i / 2;
    if (i % 2 == 0) {
      const CMatrix lhs = ops.H * ops.P[f] - ops.P[f] * ops.H;
      return max_abs(lhs - kI * p.hbar * p.mass * p.omega * p.omega * ops.R[f]);
    }
    const CMatrix lhs = ops.H * ops.R[f] - ops.R[f] * ops.H;
    return max_abs(lhs + (kI * p.hbar / p.mass) * ops.P[f]);
  });
  CcResidual out;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] > out.max) {
      out.max = res[i];
      out.worst = i / 2;
      out.worst_is_momentum = i % 2 == 0;
    }
  }
  return out;
}

CheckReport check_hamilton_heisenberg(const AssignedOperators& ops, const PhysParams& p, double tol, Exec exec) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (ops.H.size() == 0) throw std::invalid_argument("check_hamilton_heisenberg needs H; call build_h first");
  const CcResidual r = cc_residual(ops, p, exec);
  std::ostringstream details;
  details << "max residual " << r.max << " (tol " << tol << ")";
  if (r.max <= tol) return {"hamilton_heisenberg", true, std::nullopt, details.str()};
  const int alpha = static_cast<int>(r.worst) / ops.D + 1;
  const int j = static_cast<int>(r.worst) % ops.D + 1;
  return {"hamilton_heisenberg",
          false,
          nlohmann::json{{"alpha", alpha},
                         {"j", j},
                         {"identity", r.worst_is_momentum ? "[H,P] = i hbar m w^2 R" : "[H,R] = -(i hbar/m) P"},
                         {"residual", r.max}},
          details.str()};
}

CheckReport dagger_report(const CaoSet& caos) {
  std::size_t holds = 0;
  std::optional<nlohmann::json> witness;
  for (const auto& pr : caos.pairs) {
    const SuperMatrix adj = dagger(pr.plus);
    if (adj == pr.minus) {
      ++holds;
    } else if (!witness) {
      witness = nlohmann::json{{"label", {pr.label.r, pr.label.k}},
                               {"dagger_plus", to_json(adj)},
                               {"minus", to_json(pr.minus)}};
    }
  }
  const bool all = holds == caos.size();
  return {"dagger_defining", all, witness,
          std::to_string(holds) + "/" + std::to_string(caos.size()) +
              " pairs satisfy (x+)^dagger = x- in the defining representation (informational)"};
}

std::string h_eigen_note(const CMatrix& H) {
  Eigen::ComplexEigenSolver<CMatrix> solver(H, false);
  std::vector<std::complex<double>> ev(solver.eigenvalues().data(),
                                       solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::ostringstream os;
  os.precision(6);
  os << "defining-representation eigenvalues of H:";
  for (const auto& e : ev) {
    const double re = std::abs(e.real()) < 1e-12 ? 0.0 : e.real();
    const double im = std::abs(e.imag()) < 1e-12 ? 0.0 : e.imag();
    os << ' ' << re;
    if (im != 0.0) os << (im > 0 ? "+" : "") << im << 'i';
  }
  return os.str();
}

}  // namespace wqo
