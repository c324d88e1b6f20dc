#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <memory>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mrclab/experiments.hpp"
#include "mrclab/koszul.hpp"
#include "mrclab/rng.hpp"
#include "oracle.hpp"

using namespace mrclab;

namespace {

curves::EmbeddedPointSet random_points(unsigned n, std::size_t count, std::uint32_t p,
                                       std::uint64_t seed) {
  ffla::PrimeModulus mod(p);
  SplitMix64 rng(seed);
  curves::EmbeddedPointSet pts;
  pts.n = n;
  std::set<curves::Point> seen;
  while (pts.points.size() < count) {
    curves::Point pt(n + 1);
    for (auto& v : pt) v = static_cast<std::uint32_t>(rng.below(p));
    if (!curves::normalize_point(pt, mod)) continue;
    if (seen.insert(pt).second) pts.points.push_back(pt);
  }
  return pts;
}

// composition of two differentials under the row-major domain convention
bool composes_to_zero(const ffla::MatrixGF& d1, const ffla::MatrixGF& d2) {
  REQUIRE(d1.cols() == d2.rows());
  const auto& mod = d1.modulus();
  for (std::size_t a = 0; a < d1.rows(); ++a)
    for (std::size_t c = 0; c < d2.cols(); ++c) {
      std::uint32_t acc = 0;
      for (std::size_t b = 0; b < d1.cols(); ++b)
        acc = mod.add(acc, mod.mul(d1.at(a, b), d2.at(b, c)));
      if (acc != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("index subsets are colex ordered and complete") {
  const auto subs = koszul::index_subsets(4, 2);
  const std::vector<std::vector<unsigned>> expected{{0, 1}, {0, 2}, {1, 2},
                                                    {0, 3}, {1, 3}, {2, 3}};
  CHECK(subs == expected);
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned i = 0; i <= n; ++i)
      CHECK(static_cast<long long>(koszul::index_subsets(n, i).size()) ==
            oracle::pascal_binom(n, i));
}

TEST_CASE("the differential squares to zero") {
  const auto pts = random_points(3, 9, 31, 4);
  auto tower = std::make_shared<pointsets::QuotientTower>(pts, ffla::PrimeModulus(31));
  const auto M = koszul::ValueModule::ring(tower);
  for (unsigned i = 2; i <= 4; ++i)
    for (int j = 0; j <= 2; ++j) {
      const auto d1 = koszul::differential(M, i, j);
      const auto d2 = koszul::differential(M, i - 1, j + 1);
      CHECK(composes_to_zero(d1, d2));
    }
}

TEST_CASE("a single point in P^2 resolves as the Koszul complex on two lines") {
  curves::EmbeddedPointSet pts;
  pts.n = 2;
  pts.points = {{1, 0, 0}};
  const auto d = koszul::betti_diagram(pts, 2, ffla::PrimeModulus(31));
  CHECK(d.at(0, 0) == 1);
  CHECK(d.at(1, 0) == 2);
  CHECK(d.at(2, 0) == 1);
  CHECK(d.at(3, 0) == 0);
  for (unsigned j = 1; j <= 2; ++j)
    for (unsigned i = 0; i <= 3; ++i) CHECK(d.at(i, j) == 0);
  // oracle agrees cell by cell
  for (unsigned j = 0; j <= 2; ++j)
    for (unsigned i = 0; i <= 3; ++i)
      CHECK(d.at(i, j) == oracle::naive_betti(pts, i, j, 31));
}

TEST_CASE("six points on a line in P^2 start their resolution with the line") {
  curves::CurveModel line;
  line.id = "line";
  line.data = curves::ParametricData{2, 1, {{1, 0}, {0, 1}, {1, 1}}};
  line.degree = 1;
  line.genus = 0;
  line.regularity = 1;
  const auto pts = curves::enumerate_points(line, ffla::PrimeModulus(5));
  const auto d = koszul::betti_diagram(pts, 3, ffla::PrimeModulus(5));
  CHECK(d.at(1, 0) == 1);  // the linear form through all six points
  CHECK(d.at(2, 0) == 0);
}

TEST_CASE("diagram cells agree with the independent monomial-route oracle") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    const unsigned n = 2 + trial % 2;
    const std::size_t count = 5 + rng.below(7);
    const auto pts = random_points(n, count, 31, rng.next());
    const unsigned J = 4;
    const auto d = koszul::betti_diagram(pts, J, ffla::PrimeModulus(31));
    for (unsigned j = 0; j <= J; ++j)
      for (unsigned i = 0; i <= n + 1; ++i)
        CHECK(d.at(i, j) == oracle::naive_betti(pts, i, j, 31));
  }
}

TEST_CASE("alternating Betti sums reproduce the Hilbert function") {
  // dim N_t = sum_{i,j} (-1)^i b_{i,j} C(n + t - i - j, n)
  const auto pts = random_points(2, 8, 53, 77);
  ffla::PrimeModulus mod(53);
  const unsigned J = 6;
  const auto d = koszul::betti_diagram(pts, J, mod);
  for (unsigned t = 0; t <= 4; ++t) {
    long long sum = 0;
    for (unsigned j = 0; j <= J; ++j)
      for (unsigned i = 0; i <= pts.n + 1; ++i) {
        const long long s = oracle::pascal_binom(2 + (long long)t - i - j, 2);
        sum += (i % 2 ? -1 : 1) * d.at(i, j) * s;
      }
    CHECK(sum ==
          static_cast<long long>(pointsets::hilbert_function(pts, t, mod)));
  }
}

TEST_CASE("ideal-module cells match the shifted ring cells") {
  // for points Gamma inside the full curve point set X, rows j >= reg(X) obey
  // b_{i,j}(Gamma) = b_{i-1,j+1}(ideal of Gamma in the ring of X)
  const auto curve = curves::realize(experiments::quintic_x(), ffla::PrimeModulus(53));
  auto tower = std::make_shared<pointsets::QuotientTower>(curve.points,
                                                          ffla::PrimeModulus(53));
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < 28; ++k) idx.push_back(k);

  curves::EmbeddedPointSet sub;
  sub.n = 3;
  for (auto k : idx) sub.points.push_back(curve.points.points[k]);
  const auto direct = koszul::betti_diagram(sub, 7, ffla::PrimeModulus(53));

  auto K = koszul::ValueModule::ideal(tower, idx);
  koszul::KoszulCalculator calc(K);
  for (unsigned j = 5; j <= 6; ++j)
    for (unsigned i = 1; i <= 4; ++i)
      CHECK(direct.at(i, j) == calc.betti(i - 1, static_cast<int>(j) + 1));
}

TEST_CASE("diagram serialization round-trips through JSON and CSV") {
  const auto& d = experiments::golden_points_x();
  const auto parsed = nlohmann::json::parse(d.json_rows());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == d.rows.size());
  for (std::size_t j = 0; j < d.rows.size(); ++j)
    CHECK(parsed[j].get<std::vector<long long>>() == d.rows[j]);

  // csv: header + one line per row, fields reparse to the same numbers
  std::istringstream csv(d.csv());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "j,b0,b1,b2,b3,b4");
  for (std::size_t j = 0; j < d.rows.size(); ++j) {
    std::string line;
    REQUIRE(std::getline(csv, line));
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    CHECK(std::stoull(cell) == j);
    for (long long want : d.rows[j]) {
      std::getline(fields, cell, ',');
      CHECK(std::stoll(cell) == want);
    }
  }
}

TEST_CASE("entrywise min and equality guards") {
  auto a = experiments::golden_curve_x();
  auto b = a;
  b.rows[3][2] = 1;
  const auto m = koszul::BettiDiagram::entrywise_min({a, b});
  CHECK(m.at(2, 3) == 1);
  CHECK(m.at(1, 3) == 4);
  auto c = a;
  c.rows.pop_back();
  CHECK_THROWS_AS((void)koszul::BettiDiagram::entrywise_min({a, c}), Error);
}
