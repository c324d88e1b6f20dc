#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mrclab/curves.hpp"
#include "mrclab/experiments.hpp"
#include "mrclab/polyring.hpp"
#include "mrclab/rng.hpp"
#include "oracle.hpp"

using namespace mrclab;
using polyring::HomogeneousForm;
using polyring::Monomial;

namespace {

HomogeneousForm random_form(unsigned n, unsigned degree, ffla::PrimeModulus mod,
                            SplitMix64& rng) {
  HomogeneousForm f(n, degree, mod);
  for (const auto& m : polyring::monomial_basis(n, degree))
    if (rng.below(3) == 0)
      f.add_term(m.exps, static_cast<std::uint32_t>(rng.below(mod.value())));
  return f;
}

std::vector<std::uint32_t> random_point(unsigned n, ffla::PrimeModulus mod,
                                        SplitMix64& rng) {
  std::vector<std::uint32_t> pt(n + 1);
  for (auto& v : pt) v = static_cast<std::uint32_t>(rng.below(mod.value()));
  return pt;
}

}  // namespace

TEST_CASE("monomial basis counts C(n+t,n) and leads with X_0^t") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned t = 0; t <= 12; ++t) {
      const auto basis = polyring::monomial_basis(n, t);
      CHECK(static_cast<long long>(basis.size()) == oracle::pascal_binom(n + t, n));
      // strictly increasing in the graded-lex order, no duplicates
      for (std::size_t k = 1; k < basis.size(); ++k) CHECK(basis[k - 1] < basis[k]);
      if (t > 0) {
        CHECK(basis.front().exps[0] == t);  // X_0^t first
        CHECK(basis.back().exps[n] == t);   // X_n^t last
      }
    }
}

TEST_CASE("degree-0 monomial basis is the constant") {
  const auto basis = polyring::monomial_basis(3, 0);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].degree() == 0);
}

TEST_CASE("add_term validates shape and drops cancellations") {
  ffla::PrimeModulus mod(31);
  HomogeneousForm f(2, 2, mod);
  CHECK_THROWS_AS(f.add_term({1, 1}, 1), Error);        // wrong length
  CHECK_THROWS_AS(f.add_term({1, 1, 1}, 1), Error);     // wrong degree
  f.add_term({2, 0, 0}, 5);
  f.add_term({2, 0, 0}, 26);  // cancels mod 31
  CHECK(f.is_zero());
}

TEST_CASE("evaluation is multiplicative and additive") {
  ffla::PrimeModulus mod(101);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng.below(3));
    auto f = random_form(n, 2, mod, rng);
    auto g = random_form(n, 3, mod, rng);
    const auto fg = f * g;
    const auto sum = f + f;
    for (int s = 0; s < 5; ++s) {
      const auto pt = random_point(n, mod, rng);
      CHECK(fg.evaluate(pt) == mod.mul(f.evaluate(pt), g.evaluate(pt)));
      CHECK(sum.evaluate(pt) == mod.add(f.evaluate(pt), f.evaluate(pt)));
    }
    CHECK(fg.degree() == 5);
  }
}

TEST_CASE("Euler identity: sum X_s d/dX_s f = deg(f) * f") {
  ffla::PrimeModulus mod(97);
  SplitMix64 rng(9);
  for (unsigned degree : {1u, 2u, 5u}) {
    auto f = random_form(3, degree, mod, rng);
    const auto parts = f.partials();
    REQUIRE(parts.size() == 4);
    for (int s = 0; s < 8; ++s) {
      const auto pt = random_point(3, mod, rng);
      std::uint32_t acc = 0;
      for (unsigned v = 0; v <= 3; ++v)
        acc = mod.add(acc, mod.mul(pt[v], parts[v].evaluate(pt)));
      CHECK(acc == mod.mul(degree % mod.value(), f.evaluate(pt)));
    }
  }
}

TEST_CASE("partials of a constant-degree-0 form are rejected") {
  ffla::PrimeModulus mod(31);
  HomogeneousForm f(2, 0, mod);
  f.add_term({0, 0, 0}, 1);
  CHECK_THROWS_AS(f.partials(), Error);
}

TEST_CASE("coefficient vector is dense against the graded-lex basis") {
  ffla::PrimeModulus mod(31);
  HomogeneousForm f(1, 2, mod);  // variables X_0, X_1
  f.add_term({0, 2}, 7);
  f.add_term({2, 0}, 3);
  const auto v = f.coefficient_vector();  // basis: X_0^2, X_0 X_1, X_1^2
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 3);
  CHECK(v[1] == 0);
  CHECK(v[2] == 7);
}

TEST_CASE("the quadric X0 X3 - X1 X2 vanishes on the monomial quintic") {
  ffla::PrimeModulus mod(31);
  const auto curve = curves::realize(experiments::quintic_x(), mod);
  HomogeneousForm q(3, 2, mod);
  q.add_term({1, 0, 0, 1}, 1);
  q.add_term({0, 1, 1, 0}, mod.neg(1));
  for (const auto& pt : curve.points.points) CHECK(q.evaluate(pt) == 0);
}
