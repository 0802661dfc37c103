#include <doctest.h>

#include <random>

#include "grh/classical.hpp"
#include "grh/rh_table.hpp"
#include "grh/root_oracle.hpp"
#include "test_support.hpp"

using grh::classical_table;
using grh::classical_verdict;
using grh::ComplexPolynomial;
using grh::Scalar;
using grh::Stability;

namespace {

std::vector<Scalar> ints(std::initializer_list<int> v) {
  std::vector<Scalar> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("classical array for (s^2+s+1)^2") {
  auto t = classical_table(ints({2, 3, 2, 1}));
  REQUIRE(t.first_column.size() == 5);
  CHECK(t.first_column[0] == Scalar(1));
  CHECK(t.first_column[1] == Scalar(2));
  CHECK(t.first_column[2] == Scalar(2));
  CHECK(t.first_column[3] == Scalar(1));
  CHECK(t.first_column[4] == Scalar(1));
  CHECK(classical_verdict(ints({2, 3, 2, 1})).status == Stability::Hurwitz);
}

TEST_CASE("classical array degree 2 and degree 1") {
  auto t = classical_table(ints({1, 1}));
  REQUIRE(t.first_column.size() == 3);
  CHECK(t.first_column[0] == Scalar(1));
  CHECK(t.first_column[1] == Scalar(1));
  CHECK(t.first_column[2] == Scalar(1));

  CHECK(classical_verdict(ints({5})).status == Stability::Hurwitz);
  CHECK(classical_verdict(ints({-5})).status == Stability::NotHurwitz);
}

TEST_CASE("early zero cases") {
  // s^3 + s + 1: a_1 = 0 is a division pivot
  CHECK_THROWS_AS(classical_table(ints({0, 1, 1})), grh::EarlyZeroError);
  CHECK(classical_verdict(ints({0, 1, 1})).status == Stability::Inconclusive);
  // zero constant term (root at the origin) is a first-column zero as well
  CHECK_THROWS_AS(classical_table(ints({1, 0})), grh::EarlyZeroError);
  CHECK(classical_verdict(ints({1, 0})).status == Stability::Inconclusive);
}

TEST_CASE("classical verdict signs") {
  CHECK(classical_verdict(ints({-1, 1})).status == Stability::NotHurwitz);  // s^2-s+1
  CHECK(classical_verdict(ints({2, 1})).status == Stability::Hurwitz);
}

TEST_CASE("real polynomials: classical equals generalized equals oracle") {
  std::mt19937_64 rng(41);
  int compared = 0;
  for (int trial = 0; trial < 2000 && compared < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ComplexPolynomial p = grh_test::random_real_int_poly(rng, n);
    std::vector<Scalar> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(c.re);

    grh::StabilityVerdict cv = classical_verdict(coeffs);
    if (cv.status == Stability::Inconclusive) continue;
    ++compared;
    CHECK(grh::hurwitz_verdict(p).status == cv.status);
    grh::StabilityVerdict ov = grh::oracle_verdict(p);
    CHECK(ov.status == cv.status);
  }
  CHECK(compared >= 400);
}
