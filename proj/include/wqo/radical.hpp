#pragma once

// Exact arithmetic in multi-quadratic fields Q(sqrt(d1), ..., sqrt(dk)).
//
// An element is stored as a sum  sum_s c_s * sqrt(s)  over distinct
// square-free integers s >= 1 (s = 1 is the rational part). Square roots
// of distinct square-free integers are linearly independent over Q, so
// the sorted term list with no zero coefficient is a canonical form and
// equality is structural.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wqo {

using Rational = mpq_class;
using Integer = mpz_class;

/// Result of writing n = factor^2 * square_free.
struct RadicandSplit {
  std::uint64_t square_free;
  std::uint64_t factor;
  bool operator==(const RadicandSplit&) const = default;
};

/// Splits off the largest square divisor. Throws std::invalid_argument on 0.
RadicandSplit normalize_radicand(std::uint64_t n);

/// Sorted, duplicate-free set of square-free radicands > 1.
class RadBasis {
 public:
  RadBasis() = default;
  explicit RadBasis(std::vector<std::uint64_t> radicands);

  const std::vector<std::uint64_t>& radicands() const { return radicands_; }
  std::size_t size() const { return radicands_.size(); }
  bool contains(std::uint64_t d) const;
  RadBasis united(const RadBasis& other) const;

  /// All square-free products of subsets; the Q-basis of the field when
  /// the radicands are pairwise coprime. Sorted ascending, starts at 1.
  std::vector<std::uint64_t> monomials() const;

  bool operator==(const RadBasis&) const = default;

 private:
  std::vector<std::uint64_t> radicands_;
};

class RadElement {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  RadElement() = default;
  RadElement(long v) : RadElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RadElement(const Rational& q);                   // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(radicand); the radicand is normalized.
  static RadElement sqrt_of(std::uint64_t radicand, const Rational& coeff = 1);
  /// Builds from arbitrary (radicand, coeff) pairs, merging and normalizing.
  static RadElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const;
  /// Prime radicands appearing in any term; k = basis().size().
  RadBasis basis() const;

  RadElement operator-() const;
  RadElement& operator+=(const RadElement& o);
  RadElement& operator-=(const RadElement& o);
  RadElement& operator*=(const RadElement& o);

  friend RadElement operator+(RadElement a, const RadElement& b) { return a += b; }
  friend RadElement operator-(RadElement a, const RadElement& b) { return a -= b; }
  friend RadElement operator*(const RadElement& a, const RadElement& b);
  friend bool operator==(const RadElement& a, const RadElement& b);

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  RadElement abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;
  static RadElement parse(std::string_view text);

 private:
  void canonicalize();
  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

RadElement rad_mul(const RadElement& a, const RadElement& b);
/// Multiplicative inverse via the regular representation on the 2^k-dim
/// Q-space. Throws std::domain_error on zero.
RadElement rad_inv(const RadElement& a);
double rad_to_float(const RadElement& a);

std::ostream& operator<<(std::ostream& os, const RadElement& a);

}  // namespace wqo
