#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "mrclab/curves.hpp"
#include "mrclab/experiments.hpp"
#include "mrclab/pointsets.hpp"
#include "mrclab/polyring.hpp"

using namespace mrclab;

TEST_CASE("point normalization fixes the first nonzero coordinate to 1") {
  ffla::PrimeModulus mod(7);
  curves::Point p{0, 3, 5};
  REQUIRE(curves::normalize_point(p, mod));
  CHECK(p == curves::Point{0, 1, 4});  // scaled by 3^{-1} = 5
  curves::Point z{0, 0, 0};
  CHECK_FALSE(curves::normalize_point(z, mod));
}

TEST_CASE("monomial quintic has p+1 points, all distinct and normalized") {
  ffla::PrimeModulus mod(31);
  const auto pts = curves::enumerate_points(experiments::quintic_x(), mod);
  CHECK(pts.n == 3);
  CHECK(pts.points.size() == 32);
  std::set<curves::Point> seen(pts.points.begin(), pts.points.end());
  CHECK(seen.size() == 32);
  for (const auto& p : pts.points) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    REQUIRE(k < p.size());
    CHECK(p[k] == 1);
  }
}

TEST_CASE("parametric images satisfy every pullback relation") {
  // the quadric X0 X3 - X1 X2 pulls back to zero on the monomial quintic;
  // checked pointwise over two primes
  for (std::uint32_t p : {31u, 101u}) {
    ffla::PrimeModulus mod(p);
    const auto pts = curves::enumerate_points(experiments::quintic_x(), mod);
    polyring::HomogeneousForm q(3, 2, mod);
    q.add_term({1, 0, 0, 1}, 1);
    q.add_term({0, 1, 1, 0}, mod.neg(1));
    for (const auto& pt : pts.points) CHECK(q.evaluate(pt) == 0);
  }
}

TEST_CASE("a line in P^2 over GF(5) has 6 points") {
  curves::CurveModel line;
  line.id = "line";
  line.data = curves::ParametricData{2, 1, {{1, 0}, {0, 1}, {1, 1}}};
  line.degree = 1;
  line.genus = 0;
  line.regularity = 1;
  const auto pts = curves::enumerate_points(line, ffla::PrimeModulus(5));
  CHECK(pts.points.size() == 6);
}

TEST_CASE("non-injective parametrizations are refused") {
  // (u:v) -> (u^2 : v^2): the pairs (u:v), (-u:v) collide
  curves::CurveModel sq;
  sq.id = "squared";
  sq.data = curves::ParametricData{1, 2, {{1, 0, 0}, {0, 0, 1}}};
  sq.degree = 2;
  try {
    (void)curves::enumerate_points(sq, ffla::PrimeModulus(7));
    FAIL("expected a NonInjectiveParametrization error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NonInjectiveParametrization");
  }
}

TEST_CASE("common factors across coordinate forms are refused") {
  // every form divisible by u: the map is undefined at (0:1)
  curves::CurveModel bad;
  bad.id = "common-u";
  bad.data = curves::ParametricData{2, 2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
  bad.degree = 2;
  CHECK_THROWS_AS((void)curves::enumerate_points(bad, ffla::PrimeModulus(11)), Error);
}

TEST_CASE("smoothness of plane models") {
  ffla::PrimeModulus mod(53);
  CHECK(curves::is_smooth(experiments::fermat_quartic(), mod));
  CHECK(curves::is_smooth(experiments::smooth_conic(), mod));
  CHECK_FALSE(curves::is_smooth(experiments::nodal_cubic(), mod));
}

TEST_CASE("complete intersection point counts sit in the Weil window") {
  for (std::uint32_t p : {53u, 101u}) {
    const auto pts =
        curves::enumerate_points(experiments::fermat_quartic(), ffla::PrimeModulus(p));
    const long long g = 3;
    const long long half = 2 * g * static_cast<long long>(std::sqrt(double(p)) + 1);
    CHECK(std::llabs(static_cast<long long>(pts.points.size()) - (p + 1)) <= half);
  }
}

TEST_CASE("random canonical curves: reproducible, smooth, correctly sized") {
  for (auto [g, p] : {std::pair<unsigned, std::uint32_t>{4, 53}, {5, 31}}) {
    const auto m1 = curves::random_canonical_curve(g, p, 1);
    const auto m2 = curves::random_canonical_curve(g, p, 1);
    CHECK(m1.id == m2.id);
    CHECK(m1.genus == g);
    CHECK(m1.degree == 2 * g - 2);
    CHECK(m1.canonical);
    CHECK(m1.ambient() == g - 1);
    const ffla::PrimeModulus mod(p);
    CHECK(curves::is_smooth(m1, mod));
    const auto pts1 = curves::enumerate_points(m1, mod);
    const auto pts2 = curves::enumerate_points(m2, mod);
    CHECK(pts1.points == pts2.points);
    // different seeds explore different curves
    const auto m3 = curves::random_canonical_curve(g, p, 2);
    CHECK(m1.id != m3.id);
  }
  CHECK_THROWS_AS((void)curves::random_canonical_curve(3, 53, 1), Error);
}

TEST_CASE("realize computes the ideal-identification degree bound") {
  const auto c = curves::realize(experiments::quintic_x(), ffla::PrimeModulus(31));
  CHECK(c.points.points.size() == 32);
  CHECK(c.jmax == 6);  // (32-1)/5
  CHECK_FALSE(c.synthetic);
}

TEST_CASE("re-embedding the quartic by quadrics doubles the degree") {
  const auto base = curves::realize(experiments::fermat_quartic(), ffla::PrimeModulus(53));
  const auto X = curves::reembed(base, 2, {});
  CHECK(X.model.degree == 8);
  CHECK(X.model.genus == 3);
  CHECK(X.n() == 5);  // h^0 = 8 - 3 + 1 = 6 by Riemann-Roch
  CHECK(X.points.points.size() == base.points.points.size());
  CHECK(X.synthetic);
  CHECK(X.model.regularity == 3);
  CHECK(X.jmax == (base.points.points.size() - 1) / 8);
  // the image is nondegenerate: linear forms embed injectively
  const auto H1 = pointsets::hilbert_function(X.points, 1, ffla::PrimeModulus(53));
  CHECK(H1 == 6);
}

TEST_CASE("re-embedding guards") {
  const auto base = curves::realize(experiments::fermat_quartic(), ffla::PrimeModulus(61));
  // N = 32, jmax = 7: degree 8 exceeds the certified ideal degrees
  CHECK_THROWS_AS((void)curves::reembed(base, 8, {}), Error);
  // k = 1 is the canonical series itself, special: d' = 2g - 2 is rejected
  CHECK_THROWS_AS((void)curves::reembed(base, 1, {}), Error);
}
