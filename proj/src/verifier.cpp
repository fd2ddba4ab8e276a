#include "wqo/verifier.hpp"

#include <stdexcept>

namespace wqo {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"check", r.check_name}, {"passed", r.passed}, {"details", r.details}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

namespace {

nlohmann::json label_json(const CaoLabel& l) { return {l.r, l.k}; }

CheckReport pass(std::string name, std::string details) { return {std::move(name), true, std::nullopt, std::move(details)}; }

CheckReport fail(std::string name, nlohmann::json witness, std::string details) {
  return {std::move(name), false, std::move(witness), std::move(details)};
}

nlohmann::json mismatch(nlohmann::json where, const SuperMatrix& computed, const SuperMatrix& expected) {
  return {{"indices", std::move(where)}, {"computed", to_json(computed)}, {"expected", to_json(expected)}};
}

void require_family(const CaoSet& caos, std::initializer_list<Family> allowed, const char* check) {
  for (auto f : allowed)
    if (caos.family == f) return;
  throw std::invalid_argument(std::string(check) + " does not apply to family " + family_name(caos.family));
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

// --- sl(m|n) length-3 triple relations ---------------------------------------

CheckReport check_sl_triple(const CaoSet& caos, Exec exec) {
  require_family(caos, {Family::SL3}, "check_sl_triple");
  const int m = caos.params.m;
  const std::size_t M = caos.size();
  const auto& x = caos.pairs;
  auto idx = [m](int r, int k) { return static_cast<std::size_t>((r - 1) * m + (k - 1)); };

  // anti[a*M + b] = {x+_a, x-_b}
  const auto anti = generate_indexed<SuperMatrix>(
      M * M, exec, [&](std::size_t ab) { return anticommutator(x[ab / M].plus, x[ab % M].minus); });

  // Index i encodes ((a*M + b)*M + c)*2 + sign.
  auto evaluate = [&](std::size_t i, SuperMatrix& computed, SuperMatrix& expected) {
    const bool plus = i % 2 == 0;
    const std::size_t c = (i / 2) % M;
    const std::size_t ab = (i / 2) / M;
    const auto [r, ii] = x[ab / M].label;
    const auto [s, j] = x[ab % M].label;
    const auto [t, k] = x[c].label;
    const SuperMatrix& A = anti[ab];
    if (plus) {
      computed = commutator(A, x[c].plus);
      expected = SuperMatrix(caos.dim);
      if (delta(ii, j) && delta(s, t)) expected = expected + x[idx(r, k)].plus;
      if (delta(j, k) && delta(r, s)) expected = expected - x[idx(t, ii)].plus;
    } else {
      computed = commutator(A, x[c].minus);
      expected = SuperMatrix(caos.dim);
      if (delta(ii, j) && delta(r, t)) expected = expected - x[idx(s, k)].minus;
      if (delta(ii, k) && delta(r, s)) expected = expected + x[idx(t, j)].minus;
    }
  };

  const std::size_t total = M * M * M * 2;
  const std::size_t bad = first_failure(total, exec, [&](std::size_t i) {
    SuperMatrix computed, expected;
    evaluate(i, computed, expected);
    return !(computed == expected);
  });
  if (bad == total) return pass("sl_triple", std::to_string(total) + " triple relations hold exactly");

  SuperMatrix computed, expected;
  evaluate(bad, computed, expected);
  const std::size_t ab = (bad / 2) / M;
  nlohmann::json where{{"sign", bad % 2 == 0 ? "+" : "-"},
                       {"ri", label_json(x[ab / M].label)},
                       {"sj", label_json(x[ab % M].label)},
                       {"tk", label_json(x[(bad / 2) % M].label)}};
  return fail("sl_triple", mismatch(std::move(where), computed, expected), "triple relation violated");
}

// --- orthosymplectic triple relations ----------------------------------------

CheckReport check_osp_triple(const CaoSet& caos, Exec exec) {
  require_family(caos, {Family::OSPB, Family::OSPD1, Family::OSPD2}, "check_osp_triple");
  const std::size_t M = caos.size();
  const auto& x = caos.pairs;
  const auto anti =
      generate_indexed<SuperMatrix>(M, exec, [&](std::size_t a) { return anticommutator(x[a].plus, x[a].minus); });

  // Index i encodes (a*M + b)*2 + sign.
  auto evaluate = [&](std::size_t i, SuperMatrix& computed, SuperMatrix& expected) {
    const bool plus = i % 2 == 0;
    const std::size_t a = (i / 2) / M;
    const std::size_t b = (i / 2) % M;
    const auto [r, k] = x[a].label;
    const auto [s, j] = x[b].label;
    const int coeff = angle_sign(k) * angle_sign(j) * delta(std::abs(k), std::abs(j)) - delta(r, s);
    const SuperMatrix& target = plus ? x[b].plus : x[b].minus;
    computed = commutator(anti[a], target);
    expected = RadElement(plus ? coeff : -coeff) * target;
  };

  const std::size_t total = M * M * 2;
  const std::size_t bad = first_failure(total, exec, [&](std::size_t i) {
    SuperMatrix computed, expected;
    evaluate(i, computed, expected);
    return !(computed == expected);
  });
  if (bad == total) return pass("osp_triple", std::to_string(total) + " triple relations hold exactly");

  SuperMatrix computed, expected;
  evaluate(bad, computed, expected);
  nlohmann::json where{{"sign", bad % 2 == 0 ? "+" : "-"},
                       {"rk", label_json(x[(bad / 2) / M].label)},
                       {"sj", label_json(x[(bad / 2) % M].label)}};
  return fail("osp_triple", mismatch(std::move(where), computed, expected), "triple relation violated");
}

// --- compatibility-condition scalar ------------------------------------------

SuperMatrix cc_sum(const CaoSet& caos, Exec exec) {
  const auto terms = generate_indexed<SuperMatrix>(
      caos.size(), exec, [&](std::size_t a) { return anticommutator(caos.pairs[a].plus, caos.pairs[a].minus); });
  SuperMatrix sum(caos.dim);
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

CcResult cc_scalar(const CaoSet& caos, Exec exec) {
  if (caos.pairs.empty()) throw std::invalid_argument("cc_scalar needs at least one CAO pair");
  const SuperMatrix S = cc_sum(caos, exec);
  const auto& x = caos.pairs;

  // Discover lambda from the first nonzero entry of x+_1.
  const auto& [pos, pivot] = *x.front().plus.entries().begin();
  const RadElement lambda = commutator(S, x.front().plus).at(pos.first, pos.second) * rad_inv(pivot);

  const std::size_t total = x.size() * 2;
  auto residual = [&](std::size_t i) {
    const auto& pr = x[i / 2];
    return i % 2 == 0 ? commutator(S, pr.plus) - lambda * pr.plus : commutator(S, pr.minus) + lambda * pr.minus;
  };
  const std::size_t bad = first_failure(total, exec, [&](std::size_t i) { return !residual(i).is_zero(); });

  CcResult out;
  out.lambda = lambda;
  if (bad == total) {
    out.report = pass("cc_scalar", "[S, x+] = lambda x+ and [S, x-] = -lambda x- for all " +
                                       std::to_string(x.size()) + " pairs, lambda = " + lambda.to_string());
  } else {
    const auto& pr = x[bad / 2];
    const bool plus = bad % 2 == 0;
    const SuperMatrix computed = commutator(S, plus ? pr.plus : pr.minus);
    const SuperMatrix expected = (plus ? lambda : -lambda) * (plus ? pr.plus : pr.minus);
    out.report = fail("cc_scalar",
                      mismatch({{"sign", plus ? "+" : "-"}, {"sj", label_json(pr.label)}}, computed, expected),
                      "no single lambda fits every pair");
  }

  const int s = lambda.sign();
  out.usable = out.report.passed && s != 0;
  out.mu = s > 0 ? -1 : 1;
  out.c = lambda.abs();
  if (out.usable) {
    out.interchange_note = "interchanging a+ with a- gives mu = " + std::to_string(-out.mu) + ", c = " + out.c.to_string();
  } else if (out.report.passed) {
    out.interchange_note = "lambda = 0: no positive c exists";
  }
  return out;
}

RadElement expected_lambda(Family family, const FamilyParams& p) {
  validate_params(family, p);
  auto sgn = [](int v) { return (v > 0) - (v < 0); };
  const int m = p.m;
  const int n = p.n;
  switch (family) {
    case Family::SL3:
      return RadElement(m - n);
    case Family::SL5A:
      return RadElement(-sgn(2 * m - n - 2 * *p.l) * n * (m - n));
    case Family::SL5B:
      return RadElement(-sgn(2 * n - m - 2 * *p.l) * m * (n - m));
    case Family::OSPB:
      return RadElement(-(2 * m + 1));
    case Family::OSPD1:
      return RadElement(-2 * m);
    case Family::OSPD2:
      return RadElement(-2 * n);
  }
  throw std::invalid_argument("unknown family");
}

// --- para-Bose ----------------------------------------------------------------

CheckReport check_parabose(const std::vector<ParaBosePair>& bops, Exec exec) {
  if (bops.empty()) throw std::invalid_argument("check_parabose needs at least one operator pair");
  const std::size_t n = bops.size();
  auto op = [&](std::size_t r, int sign) -> const SuperMatrix& { return sign > 0 ? bops[r].plus : bops[r].minus; };
  auto sign_of = [](std::size_t bits, int which) { return (bits >> which) & 1U ? -1 : 1; };

  // Index i encodes ((r*n + s)*n + t)*8 + signs.
  auto evaluate = [&](std::size_t i, SuperMatrix& computed, SuperMatrix& expected) {
    const std::size_t bits = i % 8;
    const std::size_t t = (i / 8) % n;
    const std::size_t s = (i / 8 / n) % n;
    const std::size_t r = i / 8 / n / n;
    const int xi = sign_of(bits, 0);
    const int eta = sign_of(bits, 1);
    const int eps = sign_of(bits, 2);
    computed = commutator(anticommutator(op(r, xi), op(s, eta)), op(t, eps));
    expected = SuperMatrix(op(0, 1).dim());
    if (r == t) expected = expected + RadElement(eps - xi) * op(s, eta);
    if (s == t) expected = expected + RadElement(eps - eta) * op(r, xi);
  };

  const std::size_t total = n * n * n * 8;
  const std::size_t bad = first_failure(total, exec, [&](std::size_t i) {
    SuperMatrix computed, expected;
    evaluate(i, computed, expected);
    return !(computed == expected);
  });
  if (bad == total) return pass("parabose", std::to_string(total) + " para-Bose relations hold exactly");

  SuperMatrix computed, expected;
  evaluate(bad, computed, expected);
  const std::size_t bits = bad % 8;
  nlohmann::json where{{"r", bad / 8 / n / n + 1},
                       {"s", (bad / 8 / n) % n + 1},
                       {"t", (bad / 8) % n + 1},
                       {"xi", sign_of(bits, 0)},
                       {"eta", sign_of(bits, 1)},
                       {"epsilon", sign_of(bits, 2)}};
  return fail("parabose", mismatch(std::move(where), computed, expected), "para-Bose relation violated");
}

}  // namespace wqo
