#pragma once

// Sparse square matrices over the radical field carrying a Z2-graded
// dimension (p|q): positions 1..p are even, p+1..p+q are odd. Indices are
// 1-based throughout so constructors read like the e_ij formulas they
// implement.

#include <json.hpp>

#include <map>
#include <string>
#include <utility>

#include "wqo/radical.hpp"

namespace wqo {

struct GradedDim {
  int even = 0;
  int odd = 0;

  GradedDim() = default;
  GradedDim(int p, int q);

  int size() const { return even + odd; }
  bool is_odd_position(int i) const { return i > even; }
  bool operator==(const GradedDim&) const = default;
};

enum class Parity { even, odd, inhomogeneous };

std::string to_string(Parity p);

class SuperMatrix {
 public:
  using Index = std::pair<int, int>;
  using Entries = std::map<Index, RadElement>;

  SuperMatrix() = default;
  explicit SuperMatrix(GradedDim dim) : dim_(dim) {}
  /// Drops zero entries, range-checks indices and caches the parity.
  SuperMatrix(GradedDim dim, Entries entries);

  const GradedDim& dim() const { return dim_; }
  const Entries& entries() const { return entries_; }
  /// Zero matrices report even.
  Parity parity() const { return parity_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  RadElement at(int i, int j) const;

  SuperMatrix operator-() const;
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const RadElement& s, const SuperMatrix& a);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  GradedDim dim_;
  Entries entries_;
  Parity parity_ = Parity::even;
};

SuperMatrix unit_matrix(int i, int j, GradedDim dim);
SuperMatrix mat_mul(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix anticommutator(const SuperMatrix& a, const SuperMatrix& b);
/// Anticommutator for two odd arguments, commutator otherwise. Throws
/// std::invalid_argument when either argument is inhomogeneous.
SuperMatrix superbracket(const SuperMatrix& a, const SuperMatrix& b);
/// Transpose; entries are real so this is the adjoint.
SuperMatrix dagger(const SuperMatrix& a);

/// 0 for even, 1 for odd; throws on inhomogeneous.
int degree(const SuperMatrix& a);

nlohmann::json to_json(const SuperMatrix& a);
SuperMatrix supermatrix_from_json(const nlohmann::json& j);

}  // namespace wqo
