#include "wqo/radical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wqo {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("radicand product overflows 64 bits");
  return r;
}

std::vector<std::uint64_t> prime_factors_square_free(std::uint64_t s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= s; ++p) {
    if (s % p == 0) {
      out.push_back(p);
      s /= p;
    }
  }
  if (s > 1) out.push_back(s);
  return out;
}

// sqrt(s) * sqrt(t) = g * sqrt(s*t/g^2) for square-free s, t.
std::pair<std::uint64_t, std::uint64_t> mul_radicands(std::uint64_t s, std::uint64_t t) {
  const std::uint64_t g = std::gcd(s, t);
  return {checked_mul(s / g, t / g), g};
}

}  // namespace

RadicandSplit normalize_radicand(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("radicand must be positive");
  std::uint64_t square_free = 1;
  std::uint64_t factor = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) factor *= p;
    if (e % 2 == 1) square_free *= p;
  }
  square_free *= n;
  return {square_free, factor};
}

// --- RadBasis ---------------------------------------------------------------

RadBasis::RadBasis(std::vector<std::uint64_t> radicands) : radicands_(std::move(radicands)) {
  for (auto d : radicands_) {
    if (d <= 1 || normalize_radicand(d).factor != 1)
      throw std::invalid_argument("basis radicand " + std::to_string(d) + " is not square-free > 1");
  }
  std::sort(radicands_.begin(), radicands_.end());
  radicands_.erase(std::unique(radicands_.begin(), radicands_.end()), radicands_.end());
}

bool RadBasis::contains(std::uint64_t d) const {
  return std::binary_search(radicands_.begin(), radicands_.end(), d);
}

RadBasis RadBasis::united(const RadBasis& other) const {
  std::vector<std::uint64_t> all = radicands_;
  all.insert(all.end(), other.radicands_.begin(), other.radicands_.end());
  return RadBasis(std::move(all));
}

std::vector<std::uint64_t> RadBasis::monomials() const {
  std::vector<std::uint64_t> out{1};
  for (auto d : radicands_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(mul_radicands(out[i], d).first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- RadElement -------------------------------------------------------------

RadElement::RadElement(const Rational& q) {
  if (q != 0) terms_.emplace_back(1, q);
}

RadElement RadElement::sqrt_of(std::uint64_t radicand, const Rational& coeff) {
  const auto split = normalize_radicand(radicand);
  RadElement out;
  Rational c = coeff * Rational(static_cast<unsigned long>(split.factor));
  if (c != 0) out.terms_.emplace_back(split.square_free, std::move(c));
  return out;
}

RadElement RadElement::from_terms(std::vector<Term> terms) {
  RadElement out;
  for (auto& [s, c] : terms) {
    const auto split = normalize_radicand(s);
    out.terms_.emplace_back(split.square_free, c * Rational(static_cast<unsigned long>(split.factor)));
  }
  out.canonicalize();
  return out;
}

void RadElement::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

Rational RadElement::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return 0;
}

RadBasis RadElement::basis() const {
  std::vector<std::uint64_t> primes;
  for (const auto& [s, c] : terms_) {
    auto f = prime_factors_square_free(s);
    primes.insert(primes.end(), f.begin(), f.end());
  }
  return RadBasis(std::move(primes));
}

RadElement RadElement::operator-() const {
  RadElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RadElement& RadElement::operator+=(const RadElement& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RadElement& RadElement::operator-=(const RadElement& o) { return *this += -o; }

RadElement operator*(const RadElement& a, const RadElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RadElement out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) {
      auto [rad, g] = mul_radicands(s, t);
      Rational c = cs * ct;
      if (g != 1) c *= Rational(static_cast<unsigned long>(g));
      out.terms_.emplace_back(rad, std::move(c));
    }
  }
  out.canonicalize();
  return out;
}

RadElement& RadElement::operator*=(const RadElement& o) { return *this = *this * o; }

bool operator==(const RadElement& a, const RadElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

int RadElement::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_[0].second);
  // Split off the largest prime P: value = p + q*sqrt(P) with p, q free of P.
  const auto primes = basis().radicands();
  const std::uint64_t P = primes.back();
  RadElement p;
  RadElement q;
  for (const auto& [s, c] : terms_) {
    if (s % P == 0)
      q.terms_.emplace_back(s / P, c);
    else
      p.terms_.emplace_back(s, c);
  }
  p.canonicalize();
  q.canonicalize();
  const int sp = p.sign();
  const int sq = q.sign();
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  const RadElement disc = p * p - q * q * RadElement(Rational(static_cast<unsigned long>(P)));
  return disc.sign() * sp;
}

double RadElement::to_double() const {
  double acc = 0.0;
  for (const auto& [s, c] : terms_) acc += c.get_d() * std::sqrt(static_cast<double>(s));
  return acc;
}

std::string RadElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (neg)
      out += '-';
    else if (!first)
      out += '+';
    if (s == 1) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + std::to_string(s) + ")";
    }
    first = false;
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string text) : s_(std::move(text)) {}

  RadElement run() {
    std::vector<RadElement::Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      skip_ws();
      first = false;
    }
    return RadElement::from_terms(std::move(terms));
  }

 private:
  RadElement::Term term(int sign) {
    Rational coeff = 1;
    if (!starts_with_sqrt()) {
      coeff = rational();
      skip_ws();
      if (peek() != '*') return {1, sign * coeff};
      ++pos_;
      skip_ws();
      if (!starts_with_sqrt()) fail("expected sqrt(...) after '*'");
    }
    pos_ += 5;
    skip_ws();
    const Integer d = integer();
    skip_ws();
    if (get() != ')') fail("expected ')'");
    if (d <= 0 || !d.fits_ulong_p()) fail("radicand out of range");
    return {d.get_ui(), sign * coeff};
  }

  Rational rational() {
    Integer num = integer();
    skip_ws();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_ws();
    Integer den = integer();
    if (den <= 0) fail("denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  bool starts_with_sqrt() const { return s_.compare(pos_, 5, "sqrt(") == 0; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse radical '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RadElement RadElement::parse(std::string_view text) {
  // Accept U+2212 MINUS SIGN as '-'.
  std::string ascii;
  ascii.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      ascii += '-';
      i += 2;
    } else {
      ascii += text[i];
    }
  }
  return TermParser(std::move(ascii)).run();
}

RadElement rad_mul(const RadElement& a, const RadElement& b) { return a * b; }

RadElement rad_inv(const RadElement& a) {
  if (a.is_zero()) throw std::domain_error("division by zero in radical field");
  if (a.is_rational()) return RadElement(Rational(1 / a.rational_part()));

  const auto monomials = a.basis().monomials();
  const std::size_t dim = monomials.size();
  auto index_of = [&](std::uint64_t s) {
    return static_cast<std::size_t>(std::lower_bound(monomials.begin(), monomials.end(), s) - monomials.begin());
  };

  // Column j of the augmented system holds the coordinates of a * sqrt(monomial_j).
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    const RadElement col = a * RadElement::sqrt_of(monomials[j]);
    for (const auto& [s, c] : col.terms()) m[index_of(s)][j] = c;
  }
  m[index_of(1)][dim] = 1;

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && m[piv][col] == 0) ++piv;
    if (piv == dim) throw std::logic_error("singular multiplication map for nonzero element");
    std::swap(m[piv], m[col]);
    const Rational scale = 1 / m[col][col];
    for (auto& v : m[col]) v *= scale;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t k = col; k <= dim; ++k) m[row][k] -= f * m[col][k];
    }
  }

  std::vector<RadElement::Term> terms;
  for (std::size_t j = 0; j < dim; ++j) terms.emplace_back(monomials[j], m[j][dim]);
  return RadElement::from_terms(std::move(terms));
}

double rad_to_float(const RadElement& a) { return a.to_double(); }

std::ostream& operator<<(std::ostream& os, const RadElement& a) { return os << a.to_string(); }

}  // namespace wqo
