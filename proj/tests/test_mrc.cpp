#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "mrclab/experiments.hpp"
#include "mrclab/mrc.hpp"

using namespace mrclab;

TEST_CASE("row index r from the Hilbert polynomial window") {
  const curves::HilbertData quintic{5, 0};  // P(T) = 5T + 1
  CHECK(mrc::index_r(28, quintic, 4) == 6);  // P(5)=26 <= 28 < P(6)=31
  CHECK(mrc::index_r(26, quintic, 4) == 6);  // boundary gamma = P(5)
  CHECK(mrc::index_r(31, quintic, 4) == 7);  // boundary gamma = P(6) moves up
  CHECK(mrc::index_r(21, quintic, 4) == 5);  // gamma = P(4) exactly
  CHECK_THROWS_AS((void)mrc::index_r(20, quintic, 4), Error);

  const curves::HilbertData canonical4{6, 4};  // P(T) = 6T - 3
  CHECK(mrc::index_r(21, canonical4, 3) == 5);
  CHECK(mrc::index_r(26, canonical4, 3) == 5);
  CHECK(mrc::index_r(27, canonical4, 3) == 6);
}

TEST_CASE("diagonal differences for the quintics at gamma = 28") {
  const curves::HilbertData H{5, 0};
  CHECK(mrc::q_ir(28, 6, 0, H, 3) == 3);
  CHECK(mrc::q_ir(28, 6, 1, H, 3) == 4);
  CHECK(mrc::q_ir(28, 6, 2, H, 3) == -1);
  CHECK(mrc::q_ir(28, 6, 3, H, 3) == -2);
}

TEST_CASE("predicted tails have product zero by construction") {
  const auto curve = curves::realize(experiments::quintic_y(), ffla::PrimeModulus(31));
  for (long long gamma : {21LL, 26LL, 28LL, 30LL}) {
    const auto tail = mrc::predicted_tail(gamma, curve);
    CHECK(tail.entries.size() == 4);
    for (const auto& e : tail.entries) {
      CHECK(e.top * e.bot == 0);
      CHECK(e.top - e.bot == e.q);
      CHECK(e.top >= 0);
      CHECK(e.bot >= 0);
    }
  }
  CHECK_THROWS_AS((void)mrc::predicted_tail(5, curve), Error);
}

TEST_CASE("seeded samples are distinct, sorted, reproducible") {
  const auto a = mrc::sample_indices(32, 28, 7, 0);
  const auto b = mrc::sample_indices(32, 28, 7, 0);
  const auto c = mrc::sample_indices(32, 28, 7, 1);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 28);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::set<std::size_t>(a.begin(), a.end()).size() == 28);
  for (auto k : a) CHECK(k < 32);
  CHECK_THROWS_AS((void)mrc::sample_indices(10, 11, 7, 0), Error);
}

TEST_CASE("minimum over samples never increases a cell") {
  const auto curve = curves::realize(experiments::quintic_x(), ffla::PrimeModulus(31));
  const auto d1 = mrc::generic_diagram(curve, 28, 1, 5);
  const auto d5 = mrc::generic_diagram(curve, 28, 5, 5);
  REQUIRE(d1.rows.size() == d5.rows.size());
  for (std::size_t j = 0; j < d1.rows.size(); ++j)
    for (std::size_t i = 0; i < d1.rows[j].size(); ++i)
      CHECK(d5.rows[j][i] <= d1.rows[j][i]);
}

TEST_CASE("verdicts for the two quintics at gamma = 28") {
  const auto R = experiments::run_demo_quintics(31, 5, 1);
  CHECK(R.report_x.q_all_match);
  CHECK_FALSE(R.report_x.mrc_holds);
  CHECK(R.report_x.igc_holds);
  CHECK(R.report_x.failing == std::vector<unsigned>{2});
  CHECK(R.report_y.q_all_match);
  CHECK(R.report_y.mrc_holds);
  CHECK(R.report_y.igc_holds);
  // the specific observed values the X failure consists of
  const auto& dx = R.report_x.diagonals[2];
  CHECK(dx.observed_top == 1);  // b_{3,5}
  CHECK(dx.observed_bot == 2);  // b_{2,6}
}

TEST_CASE("window boundaries satisfy the predictions on the good quintic") {
  const auto curve = curves::realize(experiments::quintic_y(), ffla::PrimeModulus(31));
  for (long long gamma : {26LL, 30LL}) {  // P(5) and P(6) - 1
    const auto d = mrc::generic_diagram(curve, gamma, 5, 3);
    const auto rep = mrc::mrc_verdict(d, gamma, curve, 5);
    CHECK(rep.q_all_match);
    CHECK(rep.mrc_holds);
  }
}

TEST_CASE("ideal route reproduces the direct tail cells") {
  const auto curve = curves::realize(experiments::quintic_x(), ffla::PrimeModulus(53));
  const long long gamma = 28;
  const unsigned i0 = 2;
  const auto [top, bot] = mrc::generic_tail_pair_ideal(curve, gamma, i0, 5, 11);
  const auto d = mrc::generic_diagram(curve, gamma, 5, 11);
  CHECK(top == d.at(i0 + 1, 5));  // b_{3,5}
  CHECK(bot == d.at(i0, 6));      // b_{2,6}
  CHECK_THROWS_AS((void)mrc::generic_tail_pair_ideal(curve, gamma, 0, 5, 11), Error);
}

TEST_CASE("report serialization carries the verdict") {
  const auto R = experiments::run_demo_quintics(31, 5, 1);
  const auto j = R.report_x.json();
  CHECK(j.find("\"mrc\":\"fails\"") != std::string::npos);
  CHECK(j.find("\"igc\":\"holds\"") != std::string::npos);
  const auto t = R.report_y.text();
  CHECK(t.find("MRC holds") != std::string::npos);
}
