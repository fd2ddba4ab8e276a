#include "wqo/supermatrix.hpp"

#include <stdexcept>

namespace wqo {

GradedDim::GradedDim(int p, int q) : even(p), odd(q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("graded dimension needs p, q >= 0 and p+q >= 1");
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::inhomogeneous:
      return "inhomogeneous";
  }
  return "?";
}

SuperMatrix::SuperMatrix(GradedDim dim, Entries entries) : dim_(dim) {
  bool has_even = false;
  bool has_odd = false;
  const int n = dim_.size();
  for (auto& [ij, v] : entries) {
    if (v.is_zero()) continue;
    const auto [i, j] = ij;
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") outside size " +
                              std::to_string(n));
    (dim_.is_odd_position(i) == dim_.is_odd_position(j) ? has_even : has_odd) = true;
    entries_.emplace(ij, std::move(v));
  }
  if (has_even && has_odd)
    parity_ = Parity::inhomogeneous;
  else if (has_odd)
    parity_ = Parity::odd;
}

RadElement SuperMatrix::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? RadElement{} : it->second;
}

namespace {

void require_same_dim(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.dim() == b.dim())) throw std::invalid_argument("supermatrix dimension mismatch");
}

}  // namespace

SuperMatrix SuperMatrix::operator-() const {
  Entries out = entries_;
  for (auto& [ij, v] : out) v = -v;
  return {dim_, std::move(out)};
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_dim(a, b);
  SuperMatrix::Entries out = a.entries_;
  for (const auto& [ij, v] : b.entries_) out[ij] += v;
  return {a.dim_, std::move(out)};
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_dim(a, b);
  SuperMatrix::Entries out = a.entries_;
  for (const auto& [ij, v] : b.entries_) out[ij] -= v;
  return {a.dim_, std::move(out)};
}

SuperMatrix operator*(const RadElement& s, const SuperMatrix& a) {
  if (s.is_zero()) return SuperMatrix(a.dim_);
  SuperMatrix::Entries out;
  for (const auto& [ij, v] : a.entries_) out.emplace(ij, s * v);
  return {a.dim_, std::move(out)};
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

SuperMatrix unit_matrix(int i, int j, GradedDim dim) {
  return SuperMatrix(dim, {{{i, j}, RadElement(1)}});
}

SuperMatrix mat_mul(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_dim(a, b);
  SuperMatrix::Entries out;
  const auto& be = b.entries();
  for (const auto& [ik, av] : a.entries()) {
    const auto [i, k] = ik;
    for (auto it = be.lower_bound({k, 0}); it != be.end() && it->first.first == k; ++it)
      out[{i, it->first.second}] += av * it->second;
  }
  return {a.dim(), std::move(out)};
}

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b) { return mat_mul(a, b) - mat_mul(b, a); }

SuperMatrix anticommutator(const SuperMatrix& a, const SuperMatrix& b) { return mat_mul(a, b) + mat_mul(b, a); }

int degree(const SuperMatrix& a) {
  switch (a.parity()) {
    case Parity::even:
      return 0;
    case Parity::odd:
      return 1;
    case Parity::inhomogeneous:
      break;
  }
  throw std::invalid_argument("super-bracket undefined for an inhomogeneous matrix");
}

SuperMatrix superbracket(const SuperMatrix& a, const SuperMatrix& b) {
  return degree(a) == 1 && degree(b) == 1 ? anticommutator(a, b) : commutator(a, b);
}

SuperMatrix dagger(const SuperMatrix& a) {
  SuperMatrix::Entries out;
  for (const auto& [ij, v] : a.entries()) out.emplace(SuperMatrix::Index{ij.second, ij.first}, v);
  return {a.dim(), std::move(out)};
}

nlohmann::json to_json(const SuperMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, v] : a.entries()) entries.push_back({ij.first, ij.second, v.to_string()});
  return {{"dim", {a.dim().even, a.dim().odd}}, {"entries", std::move(entries)}};
}

SuperMatrix supermatrix_from_json(const nlohmann::json& j) {
  const GradedDim dim(j.at("dim").at(0).get<int>(), j.at("dim").at(1).get<int>());
  SuperMatrix::Entries entries;
  for (const auto& e : j.at("entries"))
    entries[{e.at(0).get<int>(), e.at(1).get<int>()}] += RadElement::parse(e.at(2).get<std::string>());
  return {dim, std::move(entries)};
}

}  // namespace wqo
