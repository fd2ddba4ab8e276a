#pragma once

#include <map>
#include <vector>

#include "wqo/supermatrix.hpp"

namespace wqo {

/// Exact row-echelon basis of a subspace of (p+q)x(p+q) matrices over the
/// radical field. Matrices are flattened row-major; each stored row has a
/// unit leading entry.
class MatrixSpan {
 public:
  explicit MatrixSpan(GradedDim dim) : dim_(dim) {}

  /// Adds a to the span; returns true iff a was independent of it.
  bool insert(const SuperMatrix& a);
  bool contains(const SuperMatrix& a) const;
  std::size_t rank() const { return rows_.size(); }
  /// The independent matrices accepted by insert(), in insertion order.
  const std::vector<SuperMatrix>& generators() const { return generators_; }

 private:
  using Vec = std::map<int, RadElement>;
  Vec flatten(const SuperMatrix& a) const;
  void reduce(Vec& v) const;

  GradedDim dim_;
  std::map<int, Vec> rows_;  // leading column -> row
  std::vector<SuperMatrix> generators_;
};

}  // namespace wqo
