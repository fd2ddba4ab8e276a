#include "wqo/cao.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wqo {

std::string family_name(Family f) {
  switch (f) {
    case Family::SL3:
      return "sl3";
    case Family::SL5A:
      return "sl5a";
    case Family::SL5B:
      return "sl5b";
    case Family::OSPB:
      return "ospB";
    case Family::OSPD1:
      return "ospD1";
    case Family::OSPD2:
      return "ospD2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (auto f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

[[noreturn]] void reject(Family f, const FamilyParams& p, const std::string& why) {
  std::string where = family_name(f) + "(m=" + std::to_string(p.m) + ", n=" + std::to_string(p.n);
  if (p.l) where += ", l=" + std::to_string(*p.l);
  throw std::invalid_argument(where + "): " + why);
}

int sgn(int x) { return (x > 0) - (x < 0); }

RadElement sqrt_abs(int x) { return RadElement::sqrt_of(static_cast<std::uint64_t>(std::abs(x))); }

SuperMatrix two_entry(GradedDim dim, int i1, int j1, int s1, int i2, int j2, int s2) {
  return SuperMatrix(dim, {{{i1, j1}, RadElement(s1)}, {{i2, j2}, RadElement(s2)}});
}

}  // namespace

void validate_params(Family f, const FamilyParams& p) {
  const bool split = f == Family::SL5A || f == Family::SL5B;
  if (!split && p.l) reject(f, p, "l only applies to sl5a/sl5b");
  if (p.n < 1) reject(f, p, "n must be >= 1");
  if (f == Family::OSPB) {
    if (p.m < 0) reject(f, p, "m must be >= 0");
    return;
  }
  if (p.m < 1) reject(f, p, "m must be >= 1");
  if (!split) return;
  if (!p.l) reject(f, p, "l is required");
  const int l = *p.l;
  if (f == Family::SL5A) {
    if (l < 1 || l > p.m - 1) reject(f, p, "l must satisfy 1 <= l <= m-1");
    if (p.n - 2 * l == 0) reject(f, p, "factor (n-2l) vanishes");
    if (2 * p.m - p.n - 2 * l == 0) reject(f, p, "factor (2m-n-2l) vanishes");
  } else {
    if (l < 1 || l > p.n - 1) reject(f, p, "l must satisfy 1 <= l <= n-1");
    if (p.m - 2 * l == 0) reject(f, p, "factor (m-2l) vanishes");
    if (2 * p.n - p.m - 2 * l == 0) reject(f, p, "factor (2n-m-2l) vanishes");
  }
}

int angle_sign(int j) { return sgn(j); }

std::size_t CaoSet::index_of(const CaoLabel& label) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].label == label) return i;
  throw std::out_of_range("no CAO with label (" + std::to_string(label.r) + "," + std::to_string(label.k) + ")");
}

std::size_t expected_pair_count(Family f, const FamilyParams& p) {
  const auto m = static_cast<std::size_t>(p.m);
  const auto n = static_cast<std::size_t>(p.n);
  switch (f) {
    case Family::SL3:
    case Family::SL5A:
    case Family::SL5B:
      return m * n;
    case Family::OSPB:
      return (2 * m + 1) * n;
    case Family::OSPD1:
    case Family::OSPD2:
      return 2 * m * n;
  }
  return 0;
}

CaoSet build_sl3(int m, int n) {
  const FamilyParams p{m, n, {}};
  validate_params(Family::SL3, p);
  CaoSet out{Family::SL3, p, GradedDim(m, n), {}};
  for (int r = 1; r <= n; ++r)
    for (int k = 1; k <= m; ++k)
      out.pairs.push_back({{r, k}, unit_matrix(m + r, k, out.dim), unit_matrix(k, m + r, out.dim)});
  return out;
}

CaoSet build_sl5a(int m, int n, int l) {
  const FamilyParams p{m, n, l};
  validate_params(Family::SL5A, p);
  CaoSet out{Family::SL5A, p, GradedDim(m, n), {}};
  const RadElement low = sqrt_abs(2 * m - n - 2 * l);
  const RadElement high = sqrt_abs(n - 2 * l);
  const RadElement eps(sgn((n - 2 * l) * (2 * m - n - 2 * l)));
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= m; ++k) {
      if (k <= l)
        out.pairs.push_back({{r, k}, low * unit_matrix(m + r, k, out.dim), low * unit_matrix(k, m + r, out.dim)});
      else
        out.pairs.push_back(
            {{r, k}, high * unit_matrix(k, m + r, out.dim), (eps * high) * unit_matrix(m + r, k, out.dim)});
    }
  }
  return out;
}

CaoSet build_sl5b(int m, int n, int l) {
  const FamilyParams p{m, n, l};
  validate_params(Family::SL5B, p);
  CaoSet out{Family::SL5B, p, GradedDim(m, n), {}};
  const RadElement low = sqrt_abs(2 * n - m - 2 * l);
  const RadElement high = sqrt_abs(m - 2 * l);
  const RadElement eps(sgn((m - 2 * l) * (2 * n - m - 2 * l)));
  // Block-swapped image of build_sl5a(n, m, l) under sl(n|m) ~ sl(m|n).
  // In this orientation S+ = -nu*m(n-m) x+; the orientation with the
  // e-patterns of build_sl5a gives the opposite sign.
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= m; ++k) {
      if (r <= l)
        out.pairs.push_back({{r, k}, low * unit_matrix(k, m + r, out.dim), low * unit_matrix(m + r, k, out.dim)});
      else
        out.pairs.push_back(
            {{r, k}, high * unit_matrix(m + r, k, out.dim), (eps * high) * unit_matrix(k, m + r, out.dim)});
    }
  }
  return out;
}

CaoSet build_ospB(int m, int n) {
  const FamilyParams p{m, n, {}};
  validate_params(Family::OSPB, p);
  CaoSet out{Family::OSPB, p, GradedDim(2 * m + 1, 2 * n), {}};
  const auto d = out.dim;
  const int z = 2 * m + 1;  // position of the k = 0 row
  for (int r = 1; r <= n; ++r) {
    for (int i = m; i >= 1; --i)
      out.pairs.push_back({{r, -i},
                           two_entry(d, i, z + r, 1, z + n + r, i + m, -1),
                           two_entry(d, m + i, z + n + r, 1, z + r, i, 1)});
    out.pairs.push_back({{r, 0}, two_entry(d, z, z + r, 1, z + n + r, z, -1), two_entry(d, z, z + n + r, 1, z + r, z, 1)});
    for (int i = 1; i <= m; ++i)
      out.pairs.push_back({{r, i},
                           two_entry(d, m + i, z + r, 1, z + n + r, i, -1),
                           two_entry(d, i, z + n + r, 1, z + r, m + i, 1)});
  }
  return out;
}

CaoSet build_ospD1(int m, int n) {
  const FamilyParams p{m, n, {}};
  validate_params(Family::OSPD1, p);
  CaoSet out{Family::OSPD1, p, GradedDim(2 * m, 2 * n), {}};
  const auto d = out.dim;
  const int z = 2 * m;
  for (int r = 1; r <= n; ++r) {
    for (int i = m; i >= 1; --i)
      out.pairs.push_back({{r, -i},
                           two_entry(d, i, z + r, 1, z + n + r, i + m, -1),
                           two_entry(d, m + i, z + n + r, 1, z + r, i, 1)});
    for (int i = 1; i <= m; ++i)
      out.pairs.push_back({{r, i},
                           two_entry(d, m + i, z + r, 1, z + n + r, i, -1),
                           two_entry(d, i, z + n + r, 1, z + r, m + i, 1)});
  }
  return out;
}

CaoSet build_ospD2(int m, int n) {
  const FamilyParams p{m, n, {}};
  validate_params(Family::OSPD2, p);
  CaoSet out{Family::OSPD2, p, GradedDim(2 * m, 2 * n), {}};
  const auto d = out.dim;
  const int z = 2 * m;
  for (int r = 1; r <= m; ++r) {
    for (int i = n; i >= 1; --i)
      out.pairs.push_back({{r, -i},
                           two_entry(d, m + r, z + n + i, 1, z + i, r, 1),
                           two_entry(d, r, z + i, 1, z + n + i, m + r, -1)});
    for (int i = 1; i <= n; ++i)
      out.pairs.push_back({{r, i},
                           two_entry(d, z + n + i, r, 1, m + r, z + i, -1),
                           two_entry(d, r, z + n + i, 1, z + i, m + r, 1)});
  }
  return out;
}

CaoSet build(Family f, const FamilyParams& p) {
  validate_params(f, p);
  switch (f) {
    case Family::SL3:
      return build_sl3(p.m, p.n);
    case Family::SL5A:
      return build_sl5a(p.m, p.n, *p.l);
    case Family::SL5B:
      return build_sl5b(p.m, p.n, *p.l);
    case Family::OSPB:
      return build_ospB(p.m, p.n);
    case Family::OSPD1:
      return build_ospD1(p.m, p.n);
    case Family::OSPD2:
      return build_ospD2(p.m, p.n);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<ParaBosePair> parabose_ops(const CaoSet& caos) {
  if (caos.family != Family::OSPB || caos.params.m != 0)
    throw std::invalid_argument("para-Bose operators need an ospB set with m = 0");
  const RadElement root2 = RadElement::sqrt_of(2);
  std::vector<ParaBosePair> out;
  for (int r = 1; r <= caos.params.n; ++r) {
    const auto& pair = caos.pairs[caos.index_of({r, 0})];
    out.push_back({root2 * pair.plus, (-root2) * pair.minus});
  }
  return out;
}

nlohmann::json to_json(const FamilyParams& p) {
  return {{"m", p.m}, {"n", p.n}, {"l", p.l ? nlohmann::json(*p.l) : nlohmann::json(nullptr)}};
}

FamilyParams params_from_json(const nlohmann::json& j) {
  FamilyParams p{j.at("m").get<int>(), j.at("n").get<int>(), {}};
  if (j.contains("l") && !j.at("l").is_null()) p.l = j.at("l").get<int>();
  return p;
}

nlohmann::json to_json(const CaoSet& caos) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pr : caos.pairs)
    pairs.push_back({{"label", {pr.label.r, pr.label.k}}, {"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
  return {{"family", family_name(caos.family)},
          {"params", to_json(caos.params)},
          {"dim", {caos.dim.even, caos.dim.odd}},
          {"pairs", std::move(pairs)}};
}

}  // namespace wqo
