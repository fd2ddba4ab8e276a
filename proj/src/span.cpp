#include "wqo/span.hpp"

#include <stdexcept>

namespace wqo {

MatrixSpan::Vec MatrixSpan::flatten(const SuperMatrix& a) const {
  if (!(a.dim() == dim_)) throw std::invalid_argument("span dimension mismatch");
  Vec v;
  const int n = dim_.size();
  for (const auto& [ij, x] : a.entries()) v.emplace((ij.first - 1) * n + (ij.second - 1), x);
  return v;
}

void MatrixSpan::reduce(Vec& v) const {
  // Rows have strictly larger trailing columns than their lead, so a
  // single ascending sweep eliminates every pivot column.
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const RadElement f = it->second;
    const int col = it->first;
    for (const auto& [c, x] : row->second) {
      auto& slot = v[c];
      slot -= f * x;
    }
    std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
    it = v.upper_bound(col);
  }
}

bool MatrixSpan::insert(const SuperMatrix& a) {
  Vec v = flatten(a);
  reduce(v);
  if (v.empty()) return false;
  const RadElement lead = v.begin()->second;
  if (!(lead == RadElement(1))) {
    // Rational leads are the common case; only irrational ones need the
    // regular-representation inverse.
    const RadElement inv = lead.is_rational() ? RadElement(Rational(1 / lead.rational_part())) : rad_inv(lead);
    for (auto& [c, x] : v) x = inv * x;
  }
  rows_.emplace(v.begin()->first, std::move(v));
  generators_.push_back(a);
  return true;
}

bool MatrixSpan::contains(const SuperMatrix& a) const {
  Vec v = flatten(a);
  reduce(v);
  return v.empty();
}

}  // namespace wqo
