#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wqo/cao.hpp"
#include "wqo/supermatrix.hpp"

using namespace wqo;

namespace {
const GradedDim d21{2, 1};
SuperMatrix e(int i, int j, GradedDim d = d21) { return unit_matrix(i, j, d); }

bool no_stored_zero(const SuperMatrix& a) {
  for (const auto& [ij, v] : a.entries())
    if (v.is_zero()) return false;
  return true;
}

std::vector<SuperMatrix> family_pool() {
  std::vector<SuperMatrix> pool;
  for (const auto& p : build_ospB(1, 2).pairs) {
    pool.push_back(p.plus);
    pool.push_back(RadElement::sqrt_of(3) * p.minus);
  }
  return pool;
}
}  // namespace

TEST_CASE("graded dimension") {
  CHECK_THROWS_AS(GradedDim(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(GradedDim(-1, 2), std::invalid_argument);
  CHECK(GradedDim(0, 2).size() == 2);
  CHECK(d21.is_odd_position(3));
  CHECK_FALSE(d21.is_odd_position(2));
}

TEST_CASE("unit_matrix examples") {
  const auto a = e(1, 2);
  CHECK(a.nnz() == 1);
  CHECK(a.at(1, 2) == RadElement(1));
  CHECK(a.parity() == Parity::even);
  CHECK(e(3, 1).parity() == Parity::odd);
  const auto one = unit_matrix(1, 1, {1, 0});
  CHECK(one.dim().size() == 1);
  CHECK(one.at(1, 1) == RadElement(1));
  CHECK_THROWS_AS(e(0, 1), std::out_of_range);
  CHECK_THROWS_AS(e(1, 4), std::out_of_range);
}

TEST_CASE("parity tags") {
  CHECK((e(1, 3) + e(3, 2)).parity() == Parity::odd);
  CHECK((e(1, 2) + e(3, 3)).parity() == Parity::even);
  CHECK((e(1, 2) + e(1, 3)).parity() == Parity::inhomogeneous);
  CHECK(SuperMatrix(d21).parity() == Parity::even);
  CHECK(to_string(Parity::inhomogeneous) == "inhomogeneous");
}

TEST_CASE("mat_mul examples") {
  CHECK(mat_mul(e(1, 2), e(2, 3)) == e(1, 3));
  CHECK(mat_mul(e(1, 2), e(3, 1)).is_zero());
  CHECK(mat_mul(e(3, 1), e(1, 3)) == e(3, 3));
  CHECK_THROWS_AS(mat_mul(e(1, 1), unit_matrix(1, 1, {1, 1})), std::invalid_argument);
}

TEST_CASE("unit matrix product rule") {
  const GradedDim d{2, 2};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          const auto prod = mat_mul(e(i, j, d), e(k, l, d));
          if (j == k)
            REQUIRE(prod == e(i, l, d));
          else
            REQUIRE(prod.is_zero());
        }
}

TEST_CASE("bracket examples") {
  const auto s = anticommutator(e(3, 1), e(1, 3));
  CHECK(s == e(3, 3) + e(1, 1));
  CHECK(commutator(s, e(3, 2)) == e(3, 2));
  const auto a = e(1, 3) + RadElement::sqrt_of(2) * e(2, 3);
  CHECK(commutator(a, a).is_zero());
  CHECK_THROWS_AS(anticommutator(e(1, 1), unit_matrix(1, 1, {1, 1})), std::invalid_argument);
}

TEST_CASE("superbracket") {
  CHECK(superbracket(e(3, 1), e(2, 3)) == anticommutator(e(3, 1), e(2, 3)));
  CHECK(superbracket(e(3, 1), e(1, 2)) == commutator(e(3, 1), e(1, 2)));
  CHECK(superbracket(e(1, 1), e(1, 2)) == commutator(e(1, 1), e(1, 2)));
  const auto a = e(3, 1) + e(1, 3);
  CHECK(superbracket(a, a) == RadElement(2) * mat_mul(a, a));
  CHECK_THROWS_AS(superbracket(e(1, 2) + e(1, 3), e(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(degree(e(1, 2) + e(1, 3)), std::invalid_argument);
  CHECK(degree(e(1, 3)) == 1);
  CHECK(degree(e(1, 2)) == 0);
}

TEST_CASE("dagger examples") {
  CHECK(dagger(e(1, 2)) == e(2, 1));
  CHECK(dagger(e(1, 1) + e(2, 2)) == e(1, 1) + e(2, 2));
  const auto a = e(1, 3) + RadElement::sqrt_of(5, -2) * e(3, 2);
  CHECK(dagger(dagger(a)) == a);
}

TEST_CASE("sparse product agrees with dense oracle") {
  const auto pool = family_pool();
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto prod = mat_mul(a, b);
      REQUIRE(prod == oracle::sparse(oracle::mul(oracle::dense(a), oracle::dense(b)), a.dim()));
      REQUIRE(no_stored_zero(prod));
    }
}

TEST_CASE("super-Jacobi on sampled CAO triples") {
  std::mt19937_64 rng(42);
  std::vector<SuperMatrix> pool = family_pool();
  // add some even elements: brackets of odd pairs
  const std::size_t odd_count = pool.size();
  for (std::size_t i = 0; i + 1 < odd_count; i += 3) pool.push_back(superbracket(pool[i], pool[i + 1]));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    const auto lhs = superbracket(a, superbracket(b, c));
    const int sign = degree(a) * degree(b) ? -1 : 1;
    const auto rhs = superbracket(superbracket(a, b), c) + RadElement(sign) * superbracket(b, superbracket(a, c));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("parity multiplicativity and dagger anti-homomorphism") {
  std::vector<SuperMatrix> pool = family_pool();
  const std::size_t odd_count = pool.size();
  for (std::size_t i = 0; i < odd_count; ++i)
    for (std::size_t j = i; j < odd_count; j += 5) pool.push_back(mat_mul(pool[i], pool[j]));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto prod = mat_mul(a, b);
      REQUIRE(dagger(prod) == mat_mul(dagger(b), dagger(a)));
      if (prod.is_zero() || prod.parity() == Parity::inhomogeneous) continue;
      const bool odd = (degree(a) + degree(b)) % 2 == 1;
      REQUIRE(prod.parity() == (odd ? Parity::odd : Parity::even));
    }
}

TEST_CASE("no zeros stored after arithmetic") {
  const auto a = e(1, 3) + e(2, 3);
  CHECK(no_stored_zero(a - e(1, 3)));
  CHECK((a - a).is_zero());
  CHECK((RadElement() * a).is_zero());
  CHECK(SuperMatrix(d21, {{{1, 1}, RadElement()}}).is_zero());
  CHECK_THROWS_AS(SuperMatrix(d21, {{{4, 1}, RadElement(1)}}), std::out_of_range);
  CHECK(no_stored_zero(anticommutator(a, dagger(a))));
}

TEST_CASE("json form") {
  const auto a = RadElement::sqrt_of(3) * e(3, 1) - e(1, 3);
  const auto j = to_json(a);
  CHECK(j.dump() == R"j({"dim":[2,1],"entries":[[1,3,"-1"],[3,1,"sqrt(3)"]]})j");
  CHECK(supermatrix_from_json(j) == a);
}
