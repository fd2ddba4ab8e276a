#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wqo/physics.hpp"

using namespace wqo;

namespace {

struct Case {
  CaoSet caos;
  int N, D;
};

std::vector<Case> sweep() {
  std::vector<Case> out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      if (m != n) out.push_back({build_sl3(m, n), 1, m * n});
  out.push_back({build_sl5a(3, 1, 1), 1, 3});
  out.push_back({build_sl5a(3, 1, 2), 1, 3});
  out.push_back({build_sl5b(1, 3, 1), 3, 1});
  out.push_back({build_sl5b(1, 3, 2), 1, 3});
  for (int m = 0; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) out.push_back({build_ospB(m, n), n, 2 * m + 1});
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      out.push_back({build_ospD1(m, n), n, 2 * m});
      out.push_back({build_ospD2(m, n), m, 2 * n});
    }
  return out;
}

AssignedOperators prepare(const CaoSet& caos, int N, int D, const PhysParams& p,
                          const std::optional<std::vector<std::size_t>>& bij = std::nullopt) {
  return build_h(build_rp(assign_nd(caos, N, D, bij), p), p);
}

PhysParams derived(const CaoSet& caos, double mass = 1, double omega = 1, double hbar = 1) {
  return PhysParams::from_cc(cc_scalar(caos), mass, omega, hbar);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(PhysParams{}.validate());
  CHECK_THROWS_AS((PhysParams{0, 1, 1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PhysParams{1, 1, -1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PhysParams{1, 1, 1, 1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(PhysParams::from_cc(cc_scalar(build_sl3(2, 2))), std::invalid_argument);
  const auto p = derived(build_sl3(3, 1));
  CHECK(p.mu == -1);
  CHECK(p.c == 2.0);
}

TEST_CASE("assignment") {
  const auto s = build_sl3(1, 3);
  const auto ops = assign_nd(s, 1, 3);
  for (int j = 1; j <= 3; ++j) {
    CHECK(ops.source[ops.flat(1, j)] == CaoLabel{j, 1});
    CHECK(ops.a_plus[ops.flat(1, j)] == to_complex(s.pairs[s.index_of({j, 1})].plus));
  }
  const auto pb = assign_nd(build_ospB(0, 2), 2, 1);
  CHECK(pb.a_plus.size() == 2);
  CHECK(pb.flat(2, 1) == 1);
  CHECK_THROWS_AS(assign_nd(build_sl3(3, 1), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(assign_nd(s, 1, 3, std::vector<std::size_t>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(assign_nd(s, 1, 3, std::vector<std::size_t>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(assign_nd(s, 0, 3), std::invalid_argument);
}

TEST_CASE("position and momentum") {
  const auto s = build_sl3(3, 1);
  const auto p = derived(s);
  const auto ops = build_rp(assign_nd(s, 1, 3), p);
  CHECK(ladder_residual(ops, p) <= 1e-12);
  auto flipped = p;
  flipped.mu = -p.mu;
  const auto other = build_rp(assign_nd(s, 1, 3), flipped);
  for (std::size_t f = 0; f < ops.P.size(); ++f) {
    CHECK(max_abs(other.P[f] + ops.P[f]) == 0.0);
    CHECK(max_abs(ops.R[f] - ops.R[f].adjoint()) <= 1e-15);
  }
  for (const auto& c : sweep()) {
    const auto q = derived(c.caos, 2, 3, 0.5);
    CHECK(ladder_residual(build_rp(assign_nd(c.caos, c.N, c.D), q), q) <= 1e-12);
  }
}

TEST_CASE("Hamiltonian of sl(3|1)") {
  const auto s = build_sl3(3, 1);
  const PhysParams p{1, 1, 1, 2, -1};
  const auto ops = prepare(s, 1, 3, p);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 0.5, 0.5, 0.5, 1.5;
  CHECK(max_abs(ops.H - expected) <= 1e-15);
  CHECK(max_abs(ops.H - ops.H_prime) <= 1e-10 * max_abs(ops.H));
  CHECK(h_eigen_note(ops.H).find("0.5 0.5 0.5 1.5") != std::string::npos);

  auto faster = p;
  faster.omega = 2;
  const auto ops2 = prepare(s, 1, 3, faster);
  CHECK(max_abs(ops2.H - 2.0 * ops.H) <= 1e-14);
}

TEST_CASE("the two Hamiltonian forms agree") {
  for (const auto& c : sweep()) {
    for (const auto& [mass, omega, hbar] : {std::tuple{1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}, {1.0, 3.0, 0.5}}) {
      const auto p = derived(c.caos, mass, omega, hbar);
      AssignedOperators ops;
      REQUIRE_NOTHROW(ops = prepare(c.caos, c.N, c.D, p));
      REQUIRE(max_abs(ops.H - ops.H_prime) <= 1e-10 * max_abs(ops.H));
      REQUIRE(check_hamilton_heisenberg(ops, p, 1e-10).passed);
    }
  }
}

TEST_CASE("mismatched forms raise with both matrices") {
  const auto s = build_sl3(3, 1);
  const PhysParams built{1, 1, 1, 2, -1};
  const PhysParams other{1, 1, 1, 3, -1};
  bool raised = false;
  try {
    build_h(build_rp(assign_nd(s, 1, 3), built), other);
  } catch (const HamiltonianMismatch& e) {
    raised = true;
    CHECK(e.gap > 1e-3);
    CHECK(e.H.rows() == 4);
    CHECK(e.H_prime.rows() == 4);
  }
  CHECK(raised);
  CHECK_THROWS_AS(build_h(assign_nd(s, 1, 3), built), std::invalid_argument);
}

TEST_CASE("Hamilton-Heisenberg examples") {
  const auto sl = build_sl3(3, 1);
  CHECK(check_hamilton_heisenberg(prepare(sl, 1, 3, {1, 1, 1, 2, -1}), {1, 1, 1, 2, -1}, 1e-10).passed);
  const auto b = build_ospB(1, 1);
  CHECK(check_hamilton_heisenberg(prepare(b, 1, 3, {1, 1, 1, 3, 1}), {1, 1, 1, 3, 1}, 1e-10).passed);
  const PhysParams wrong{1, 1, 1, 2, 1};
  const auto r = check_hamilton_heisenberg(prepare(sl, 1, 3, wrong), wrong, 1e-10);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->at("alpha") == 1);
  CHECK_THROWS_AS(check_hamilton_heisenberg(prepare(sl, 1, 3, wrong), wrong, 0.0), std::invalid_argument);
}

TEST_CASE("CC identities hold exactly when -mu c = lambda") {
  for (const auto& c : sweep()) {
    CAPTURE(family_name(c.caos.family));
    const auto cc = cc_scalar(c.caos);
    REQUIRE(cc.report.passed);
    const PhysParams good = PhysParams::from_cc(cc);
    REQUIRE(check_hamilton_heisenberg(prepare(c.caos, c.N, c.D, good), good, 1e-10).passed);
    PhysParams flipped = good;
    flipped.mu = -good.mu;
    CHECK_FALSE(check_hamilton_heisenberg(prepare(c.caos, c.N, c.D, flipped), flipped, 1e-10).passed);
    PhysParams scaled = good;
    scaled.c = 2 * good.c;
    CHECK_FALSE(check_hamilton_heisenberg(prepare(c.caos, c.N, c.D, scaled), scaled, 1e-10).passed);
  }
}

TEST_CASE("outcome is invariant under the assignment bijection") {
  std::mt19937_64 rng(17);
  for (const auto& c : sweep()) {
    const PhysParams p = derived(c.caos);
    PhysParams wrong = p;
    wrong.mu = -p.mu;
    std::vector<std::size_t> bij(c.caos.size());
    std::iota(bij.begin(), bij.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(bij.begin(), bij.end(), rng);
      const auto ops = prepare(c.caos, c.N, c.D, p, bij);
      REQUIRE(check_hamilton_heisenberg(ops, p, 1e-10).passed);
      REQUIRE_FALSE(check_hamilton_heisenberg(prepare(c.caos, c.N, c.D, wrong, bij), wrong, 1e-10).passed);
      REQUIRE(max_abs(ops.H - prepare(c.caos, c.N, c.D, p).H) <= 1e-12);
    }
  }
}

TEST_CASE("float sum matches the exact sum") {
  for (const auto& c : sweep()) {
    const CMatrix exact = to_complex(cc_sum(c.caos));
    const auto ops = assign_nd(c.caos, c.N, c.D);
    CMatrix sum = CMatrix::Zero(exact.rows(), exact.cols());
    for (std::size_t f = 0; f < ops.a_plus.size(); ++f)
      sum += ops.a_plus[f] * ops.a_minus[f] + ops.a_minus[f] * ops.a_plus[f];
    REQUIRE(max_abs(sum - exact) <= 1e-12);
  }
}

TEST_CASE("serial and parallel residuals agree") {
  omp_set_num_threads(4);
  for (const auto& c : sweep()) {
    const auto p = derived(c.caos);
    const auto ops = prepare(c.caos, c.N, c.D, p);
    const auto a = cc_residual(ops, p, Exec::serial);
    const auto b = cc_residual(ops, p, Exec::parallel);
    REQUIRE(a.max == b.max);
    REQUIRE(a.worst == b.worst);
  }
}

TEST_CASE("dagger report") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(dagger_report(build_sl3(m, n)).passed);
  const auto r = dagger_report(build_ospB(1, 1));
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.check_name == "dagger_defining");
  CHECK(to_json(r).dump() == to_json(dagger_report(build_ospB(1, 1))).dump());
  CHECK(r.details.find("/3 pairs") != std::string::npos);
}
