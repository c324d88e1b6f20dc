#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrclab/curves.hpp"
#include "mrclab/koszul.hpp"

namespace mrclab::mrc {

/// The unique r >= m+1 with P(r-1) <= gamma < P(r); boundary gamma = P(r0)
/// lands in r = r0 + 1.
long long index_r(long long gamma, const curves::HilbertData& H, unsigned m);

/// Predicted diagonal difference b_{i+1,r-1} - b_{i,r} for a curve in P^n:
/// the general one-dimensional formula and its curve specialization
/// d*C(n-1,i) - (gamma - P(r-1))*C(n,i) are both evaluated and must agree.
long long q_ir(long long gamma, long long r, unsigned i, const curves::HilbertData& H,
               unsigned n);

struct TailPrediction {
  long long gamma = 0;
  long long r = 0;
  struct Entry {
    unsigned i;
    long long q;
    long long top;  // predicted b_{i+1, r-1} = max(q, 0)
    long long bot;  // predicted b_{i, r}   = max(-q, 0)
  };
  std::vector<Entry> entries;  // i = 0..n
};

TailPrediction predicted_tail(long long gamma, const curves::RealizedCurve& curve);

/// Seeded gamma-subset of 0..total-1, distinct, sorted.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t gamma,
                                        std::uint64_t seed, std::uint64_t sample);

/// Entrywise minimum of betti_diagram over `samples` independent seeded
/// gamma-subsets of the curve's rational points; rows 0..r+1.
koszul::BettiDiagram generic_diagram(const curves::RealizedCurve& curve,
                                     long long gamma, unsigned samples,
                                     std::uint64_t seed);

/// Observed (b_{i0+1,r-1}, b_{i0,r}) minimized over samples, computed through
/// the ideal of the sample inside the curve's coordinate ring:
/// b_{i,j}(points) = b_{i-1,j+1}(ideal) for rows j >= reg(curve). Needs
/// r + 2 <= curve.jmax. Cheap enough for large ambient dimension.
std::pair<long long, long long> generic_tail_pair_ideal(
    const curves::RealizedCurve& curve, long long gamma, unsigned i0,
    unsigned samples, std::uint64_t seed);

struct MRCReport {
  std::string curve_id;
  std::uint32_t prime = 0;
  long long gamma = 0;
  long long r = 0;
  unsigned samples = 0;
  struct Diagonal {
    unsigned i;
    long long observed_top, observed_bot;  // b_{i+1,r-1}, b_{i,r}
    long long q;
    long long predicted_top, predicted_bot;
    bool q_match;
    bool product_zero;
  };
  std::vector<Diagonal> diagonals;
  bool q_all_match = false;
  bool mrc_holds = false;
  bool igc_holds = false;  // the i=1 diagonal
  std::vector<unsigned> failing;

  std::string json() const;
  std::string text() const;
};

/// Compares an (assumed generic) diagram against the predictions.
MRCReport mrc_verdict(const koszul::BettiDiagram& diagram, long long gamma,
                      const curves::RealizedCurve& curve, unsigned samples_used);

}  // namespace mrclab::mrc
