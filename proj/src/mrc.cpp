#include "mrclab/mrc.hpp"

#include <algorithm>
#include <sstream>

#include "mrclab/parallel.hpp"
#include "mrclab/rng.hpp"

namespace mrclab::mrc {

namespace {

long long binom_ll(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (long long k = 0; k < std::min(b, a - b); ++k) r = r * (a - k) / (k + 1);
  return r;
}

}  // namespace

long long index_r(long long gamma, const curves::HilbertData& H, unsigned m) {
  if (gamma < H.poly(m))
    throw Error("GammaTooSmall", "gamma=" + std::to_string(gamma) +
                                     " below P(m)=" + std::to_string(H.poly(m)));
  long long r = m + 1;
  while (H.poly(r) <= gamma) ++r;
  return r;
}

long long q_ir(long long gamma, long long r, unsigned i, const curves::HilbertData& H,
               unsigned n) {
  // general form, one-dimensional case: single l=0 term with the forward
  // first difference of P at r
  const long long general =
      binom_ll(n - 1, i) * (H.poly(r) - H.poly(r - 1)) -
      binom_ll(n, i) * (gamma - H.poly(r - 1));
  // curve specialization
  const long long curve =
      H.degree * binom_ll(n - 1, i) - (gamma - H.poly(r - 1)) * binom_ll(n, i);
  if (general != curve)
    throw Error("InconsistentSystem", "diagonal difference formulas disagree");
  return general;
}

TailPrediction predicted_tail(long long gamma, const curves::RealizedCurve& curve) {
  const auto H = curve.hilbert();
  if (gamma < std::max(H.genus, H.poly(curve.model.regularity)))
    throw Error("GammaTooSmall", "gamma below the curve's prediction range");
  TailPrediction out;
  out.gamma = gamma;
  out.r = index_r(gamma, H, curve.model.regularity);
  for (unsigned i = 0; i <= curve.n(); ++i) {
    const long long q = q_ir(gamma, out.r, i, H, curve.n());
    out.entries.push_back({i, q, std::max(q, 0LL), std::max(-q, 0LL)});
  }
  return out;
}

std::vector<std::size_t> sample_indices(std::size_t total, std::size_t gamma,
                                        std::uint64_t seed, std::uint64_t sample) {
  if (gamma > total) throw Error("TooFewPoints", "sample larger than point pool");
  SplitMix64 rng(SplitMix64::mix(seed, sample));
  std::vector<std::size_t> idx(total);
  for (std::size_t k = 0; k < total; ++k) idx[k] = k;
  for (std::size_t k = 0; k < gamma; ++k)
    std::swap(idx[k], idx[k + rng.below(total - k)]);
  idx.resize(gamma);
  std::sort(idx.begin(), idx.end());
  return idx;
}

koszul::BettiDiagram generic_diagram(const curves::RealizedCurve& curve,
                                     long long gamma, unsigned samples,
                                     std::uint64_t seed) {
  if (samples < 1) throw Error("DomainViolation", "need at least one sample");
  if (gamma > static_cast<long long>(curve.points.points.size()))
    throw Error("TooFewPoints", curve.model.id + " has only " +
                                    std::to_string(curve.points.points.size()) +
                                    " rational points, need " + std::to_string(gamma));
  const long long r = index_r(gamma, curve.hilbert(), curve.model.regularity);
  const unsigned J = static_cast<unsigned>(r) + 1;
  const ffla::PrimeModulus mod(curve.prime);

  std::vector<koszul::BettiDiagram> diagrams(samples);
  parallel_for(samples, [&](std::size_t s) {
    auto idx = sample_indices(curve.points.points.size(), gamma, seed, s);
    curves::EmbeddedPointSet sub;
    sub.n = curve.n();
    sub.provenance = curve.points.provenance;
    sub.provenance.seed = seed;
    sub.provenance.sample = s;
    for (std::size_t k : idx) sub.points.push_back(curve.points.points[k]);
    diagrams[s] = koszul::betti_diagram(sub, J, mod);
  });
  auto out = koszul::BettiDiagram::entrywise_min(diagrams);
  out.source = curve.model.id + " generic gamma=" + std::to_string(gamma);
  return out;
}

std::pair<long long, long long> generic_tail_pair_ideal(
    const curves::RealizedCurve& curve, long long gamma, unsigned i0,
    unsigned samples, std::uint64_t seed) {
  if (i0 < 1) throw Error("DomainViolation", "ideal route needs i0 >= 1");
  if (gamma > static_cast<long long>(curve.points.points.size()))
    throw Error("TooFewPoints", "not enough rational points for the sample");
  const long long r = index_r(gamma, curve.hilbert(), curve.model.regularity);
  if (static_cast<unsigned>(r) + 2 > curve.jmax)
    throw Error("DegreeGuardViolated", "ideal route needs graded pieces up to r+2");
  const ffla::PrimeModulus mod(curve.prime);
  auto tower = std::make_shared<pointsets::QuotientTower>(curve.points, mod);
  for (long long t = 0; t <= r + 2; ++t) tower->at(static_cast<unsigned>(t));

  std::vector<long long> tops(samples), bots(samples);
  parallel_for(samples, [&](std::size_t s) {
    auto idx = sample_indices(curve.points.points.size(), gamma, seed, s);
    koszul::ValueModule K = koszul::ValueModule::ideal(tower, idx);
    koszul::KoszulCalculator calc(K);
    // b_{i,j}(sample) = b_{i-1,j+1}(K) for j >= reg
    tops[s] = calc.betti(i0, static_cast<int>(r));        // b_{i0+1, r-1}
    bots[s] = calc.betti(i0 - 1, static_cast<int>(r) + 1); // b_{i0, r}
  });
  return {*std::min_element(tops.begin(), tops.end()),
          *std::min_element(bots.begin(), bots.end())};
}

MRCReport mrc_verdict(const koszul::BettiDiagram& diagram, long long gamma,
                      const curves::RealizedCurve& curve, unsigned samples_used) {
  const auto pred = predicted_tail(gamma, curve);
  if (diagram.rows.size() < static_cast<std::size_t>(pred.r) + 1)
    throw Error("ShapeMismatch", "diagram does not reach row r");

  MRCReport rep;
  rep.curve_id = curve.model.id;
  rep.prime = curve.prime;
  rep.gamma = gamma;
  rep.r = pred.r;
  rep.samples = samples_used;
  rep.q_all_match = true;
  rep.mrc_holds = true;
  rep.igc_holds = true;
  for (const auto& e : pred.entries) {
    MRCReport::Diagonal d;
    d.i = e.i;
    d.observed_top = e.i + 1 <= diagram.n + 1
                         ? diagram.at(e.i + 1, static_cast<unsigned>(pred.r) - 1)
                         : 0;
    d.observed_bot = diagram.at(e.i, static_cast<unsigned>(pred.r));
    d.q = e.q;
    d.predicted_top = e.top;
    d.predicted_bot = e.bot;
    d.q_match = d.observed_top - d.observed_bot == e.q;
    d.product_zero = d.observed_top == 0 || d.observed_bot == 0;
    rep.q_all_match = rep.q_all_match && d.q_match;
    if (!d.product_zero) {
      rep.mrc_holds = false;
      rep.failing.push_back(e.i);
      if (e.i == 1) rep.igc_holds = false;
    }
    rep.diagonals.push_back(d);
  }
  return rep;
}

std::string MRCReport::json() const {
  std::ostringstream os;
  os << "{\"curve\":\"" << curve_id << "\",\"prime\":" << prime
     << ",\"gamma\":" << gamma << ",\"r\":" << r << ",\"samples\":" << samples
     << ",\"diagonals\":[";
  for (std::size_t k = 0; k < diagonals.size(); ++k) {
    const auto& d = diagonals[k];
    os << (k ? "," : "") << "{\"i\":" << d.i << ",\"observed\":[" << d.observed_top
       << "," << d.observed_bot << "],\"q\":" << d.q << ",\"predicted\":["
       << d.predicted_top << "," << d.predicted_bot << "],\"q_match\":"
       << (d.q_match ? "true" : "false") << ",\"product_zero\":"
       << (d.product_zero ? "true" : "false") << "}";
  }
  os << "],\"q_all_match\":" << (q_all_match ? "true" : "false")
     << ",\"mrc\":" << (mrc_holds ? "\"holds\"" : "\"fails\"")
     << ",\"igc\":" << (igc_holds ? "\"holds\"" : "\"fails\"") << ",\"failing\":[";
  for (std::size_t k = 0; k < failing.size(); ++k) os << (k ? "," : "") << failing[k];
  os << "]}";
  return os.str();
}

std::string MRCReport::text() const {
  std::ostringstream os;
  os << curve_id << " p=" << prime << " gamma=" << gamma << " r=" << r
     << " samples=" << samples << "\n";
  for (const auto& d : diagonals)
    os << "  i=" << d.i << " observed (b_{i+1,r-1}, b_{i,r}) = (" << d.observed_top
       << ", " << d.observed_bot << ") q=" << d.q << " predicted=("
       << d.predicted_top << ", " << d.predicted_bot << ")"
       << (d.q_match ? "" : "  [q mismatch]")
       << (d.product_zero ? "" : "  [nonzero product]") << "\n";
  os << "  MRC " << (mrc_holds ? "holds" : "fails") << ", IGC "
     << (igc_holds ? "holds" : "fails") << "\n";
  return os.str();
}

}  // namespace mrclab::mrc
