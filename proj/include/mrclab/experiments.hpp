#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrclab/curves.hpp"
#include "mrclab/koszul.hpp"
#include "mrclab/mrc.hpp"

namespace mrclab::experiments {

// built-in models
curves::CurveModel quintic_x();  // (u^5, u^4 v, u v^4, v^5)
curves::CurveModel quintic_y();  // (u^5 + u^3 v^2, u^4 v - u^2 v^3, u v^4, v^5)
curves::CurveModel fermat_quartic();
curves::CurveModel nodal_cubic();
curves::CurveModel smooth_conic();

// golden diagrams for the two quintics and their 28-point generic sets
const koszul::BettiDiagram& golden_curve_x();
const koszul::BettiDiagram& golden_curve_y();
const koszul::BettiDiagram& golden_points_x();
const koszul::BettiDiagram& golden_points_y();

/// True Hilbert function of the realized curve: extensional rank when the
/// point count certifies the degree, otherwise the model value (canonical:
/// g at t=1 then P(t); re-embedded nonspecial: P(t) for t >= 1).
long long hilbert_X(const curves::RealizedCurve& curve, unsigned t);

// JSON curve configs (fields: model, n, degree, forms / equations;
// optional id, genus, regularity, canonical)
curves::CurveModel model_from_json(const std::string& text);
std::string model_to_json(const curves::CurveModel& model);

struct QuinticsResult {
  koszul::BettiDiagram curve_x, curve_y, points_x, points_y;
  bool curve_x_match = false, curve_y_match = false;
  bool points_x_match = false, points_y_match = false;
  mrc::MRCReport report_x, report_y;
  bool all_match() const {
    return curve_x_match && curve_y_match && points_x_match && points_y_match;
  }
};

QuinticsResult run_demo_quintics(std::uint32_t prime, unsigned samples,
                                 std::uint64_t seed);

/// generic diagram + verdict with one escalation through the prime ladder
/// when the diagonal-difference consistency check fails at a prime.
mrc::MRCReport mrc_with_ladder(const curves::CurveModel& model,
                               const std::vector<std::uint32_t>& ladder,
                               long long gamma, unsigned samples, std::uint64_t seed,
                               std::uint32_t* prime_used = nullptr);

struct CanonicalScanResult {
  std::vector<mrc::MRCReport> reports;
  bool all_products_zero = true;
  bool all_q_match = true;
  std::vector<std::string> findings;  // persistent deviations, reported not hidden
};

/// Random canonical curves of genus 4 or 5, gamma scanning the full window
/// [P(4), P(5)) with r = 5, min over samples, ladder escalation allowed once.
CanonicalScanResult canonical_mrc_scan(unsigned g,
                                       const std::vector<std::uint32_t>& ladder,
                                       unsigned curve_count, unsigned samples,
                                       std::uint64_t seed);

struct IgcScanResult {
  long long degree = 0;
  std::vector<mrc::MRCReport> reports;
  bool igc_all = true;
};

/// Plane quartic re-embedded to degree 6 (k=3 with six seeded base points)
/// or 8 (k=2, no base points); IGC over the full window at r = 4.
IgcScanResult igc_reembedding_experiment(long long target_degree, std::uint32_t prime,
                                         unsigned samples, std::uint64_t seed);

struct FailureScanResult {
  std::uint32_t prime = 0;
  std::string curve_id;
  long long r = 0;
  unsigned i0 = 0;
  struct Cell {
    long long gamma, top, bot;
  };
  std::vector<Cell> scanned;
  long long gamma_found = -1;
  bool found = false;
};

/// Genus-4 canonical curve re-embedded to degree 24 in P^20; scans gamma over
/// [P(3), P(4)) for a nonzero product b_{3,3} * b_{2,4] at i0 = 2, two cells
/// per gamma through the ideal route. Stops at the first hit.
FailureScanResult failure_experiment(std::uint32_t prime, unsigned samples,
                                     std::uint64_t seed);

}  // namespace mrclab::experiments
