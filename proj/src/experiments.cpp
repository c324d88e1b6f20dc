#include "mrclab/experiments.hpp"

#include <optional>
#include <utility>

#include "json.hpp"
#include "mrclab/pointsets.hpp"
#include "mrclab/rng.hpp"

namespace mrclab::experiments {

using json = nlohmann::json;

curves::CurveModel quintic_x() {
  curves::CurveModel m;
  m.id = "quintic-x";
  m.data = curves::ParametricData{
      3, 5,
      {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}};
  m.genus = 0;
  m.degree = 5;
  m.regularity = 4;
  return m;
}

curves::CurveModel quintic_y() {
  curves::CurveModel m;
  m.id = "quintic-y";
  m.data = curves::ParametricData{3, 5,
                                  {{1, 0, 1, 0, 0, 0},
                                   {0, 1, 0, -1, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1}}};
  m.genus = 0;
  m.degree = 5;
  m.regularity = 4;
  return m;
}

curves::CurveModel fermat_quartic() {
  curves::CurveModel m;
  m.id = "fermat-quartic";
  m.data = curves::CompleteIntersectionData{
      2, {{{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}}}};
  m.genus = 3;
  m.degree = 4;
  m.regularity = 4;
  m.canonical = true;
  return m;
}

curves::CurveModel nodal_cubic() {
  curves::CurveModel m;
  m.id = "nodal-cubic";
  m.data = curves::CompleteIntersectionData{
      2, {{{{0, 2, 1}, 1}, {{3, 0, 0}, -1}, {{2, 0, 1}, -1}}}};
  m.genus = 1;  // arithmetic genus of the plane cubic
  m.degree = 3;
  m.regularity = 3;
  return m;
}

curves::CurveModel smooth_conic() {
  curves::CurveModel m;
  m.id = "smooth-conic";
  m.data = curves::CompleteIntersectionData{2, {{{{1, 0, 1}, 1}, {{0, 2, 0}, -1}}}};
  m.genus = 0;
  m.degree = 2;
  m.regularity = 2;
  return m;
}

namespace {

koszul::BettiDiagram make_golden(std::vector<std::vector<long long>> rows,
                                 std::string source) {
  koszul::BettiDiagram d;
  d.n = 3;
  d.rows = std::move(rows);
  d.source = std::move(source);
  return d;
}

}  // namespace

const koszul::BettiDiagram& golden_curve_x() {
  static const koszul::BettiDiagram d = make_golden(
      {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 4, 6, 2, 0}},
      "golden:quintic-x");
  return d;
}

const koszul::BettiDiagram& golden_curve_y() {
  static const koszul::BettiDiagram d = make_golden(
      {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 4, 3, 0, 0}, {0, 1, 2, 1, 0}},
      "golden:quintic-y");
  return d;
}

const koszul::BettiDiagram& golden_points_x() {
  static const koszul::BettiDiagram d =
      make_golden({{1, 0, 0, 0, 0},
                   {0, 1, 0, 0, 0},
                   {0, 0, 0, 0, 0},
                   {0, 4, 6, 2, 0},
                   {0, 0, 0, 0, 0},
                   {0, 3, 4, 1, 0},
                   {0, 0, 2, 2, 0}},
                  "golden:quintic-x-points-28");
  return d;
}

const koszul::BettiDiagram& golden_points_y() {
  static const koszul::BettiDiagram d =
      make_golden({{1, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0},
                   {0, 4, 3, 0, 0},
                   {0, 1, 2, 1, 0},
                   {0, 0, 0, 0, 0},
                   {0, 3, 4, 0, 0},
                   {0, 0, 1, 2, 0}},
                  "golden:quintic-y-points-28");
  return d;
}

long long hilbert_X(const curves::RealizedCurve& curve, unsigned t) {
  if (t == 0) return 1;
  const auto H = curve.hilbert();
  if (curve.model.canonical) return t == 1 ? H.genus : H.poly(t);
  if (curve.synthetic) return H.poly(t);  // nonspecial, projectively normal
  if (t <= curve.jmax)
    return static_cast<long long>(
        pointsets::hilbert_function(curve.points, t, ffla::PrimeModulus(curve.prime)));
  return H.poly(t);  // past the certified range only t >= reg is ever asked for
}

curves::CurveModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("ConfigError", std::string("bad JSON: ") + e.what());
  }
  try {
    curves::CurveModel m;
    const std::string kind = j.at("model").get<std::string>();
    if (kind == "parametric_rational") {
      curves::ParametricData p;
      p.n = j.at("n").get<unsigned>();
      p.degree = j.at("degree").get<unsigned>();
      p.forms = j.at("forms").get<std::vector<std::vector<long long>>>();
      if (p.forms.size() != p.n + 1)
        throw Error("ConfigError", "need n+1 coordinate forms");
      for (const auto& f : p.forms)
        if (f.size() != p.degree + 1)
          throw Error("ConfigError", "each form needs degree+1 coefficients");
      m.data = p;
      m.degree = p.degree;
      m.genus = j.value("genus", 0LL);
      m.regularity = j.value("regularity", 4u);
    } else if (kind == "complete_intersection") {
      curves::CompleteIntersectionData ci;
      ci.n = j.at("n").get<unsigned>();
      for (const auto& eq : j.at("equations")) {
        std::vector<curves::CITerm> terms;
        for (const auto& t : eq) {
          curves::CITerm ct;
          ct.exps = t.at("exps").get<std::vector<unsigned>>();
          ct.c = t.at("c").get<long long>();
          if (ct.exps.size() != ci.n + 1)
            throw Error("ConfigError", "each exponent list needs n+1 entries");
          terms.push_back(std::move(ct));
        }
        ci.equations.push_back(std::move(terms));
      }
      m.data = ci;
      m.genus = j.at("genus").get<long long>();
      m.degree = j.at("degree").get<long long>();
      m.regularity = j.value("regularity", 4u);
      m.canonical = j.value("canonical", false);
    } else {
      throw Error("ConfigError", "unknown model kind: " + kind);
    }
    m.id = j.value("id", kind);
    return m;
  } catch (const json::exception& e) {
    throw Error("ConfigError", std::string("bad curve config: ") + e.what());
  }
}

std::string model_to_json(const curves::CurveModel& model) {
  json j;
  j["id"] = model.id;
  j["genus"] = model.genus;
  j["degree"] = model.degree;
  j["regularity"] = model.regularity;
  if (const auto* p = std::get_if<curves::ParametricData>(&model.data)) {
    j["model"] = "parametric_rational";
    j["n"] = p->n;
    j["forms"] = p->forms;
  } else if (const auto* ci =
                 std::get_if<curves::CompleteIntersectionData>(&model.data)) {
    j["model"] = "complete_intersection";
    j["n"] = ci->n;
    j["canonical"] = model.canonical;
    json eqs = json::array();
    for (const auto& eq : ci->equations) {
      json terms = json::array();
      for (const auto& t : eq) terms.push_back({{"exps", t.exps}, {"c", t.c}});
      eqs.push_back(std::move(terms));
    }
    j["equations"] = std::move(eqs);
  } else {
    throw Error("ConfigError", "model carries no data");
  }
  return j.dump(2);
}

namespace {

// golden rows must match and any extra observed rows must vanish
bool matches_with_zero_tail(const koszul::BettiDiagram& got,
                            const koszul::BettiDiagram& want) {
  if (got.n != want.n || got.rows.size() < want.rows.size()) return false;
  for (std::size_t j = 0; j < want.rows.size(); ++j)
    if (got.rows[j] != want.rows[j]) return false;
  for (std::size_t j = want.rows.size(); j < got.rows.size(); ++j)
    for (long long v : got.rows[j])
      if (v != 0) return false;
  return true;
}

}  // namespace

QuinticsResult run_demo_quintics(std::uint32_t prime, unsigned samples,
                                 std::uint64_t seed) {
  const ffla::PrimeModulus mod(prime);
  QuinticsResult R;
  const auto cx = curves::realize(quintic_x(), mod);
  const auto cy = curves::realize(quintic_y(), mod);

  R.curve_x = koszul::curve_betti_diagram(cx, 3);
  R.curve_y = koszul::curve_betti_diagram(cy, 3);
  R.curve_x_match = R.curve_x.rows == golden_curve_x().rows;
  R.curve_y_match = R.curve_y.rows == golden_curve_y().rows;

  R.points_x = mrc::generic_diagram(cx, 28, samples, SplitMix64::mix(seed, 1));
  R.points_y = mrc::generic_diagram(cy, 28, samples, SplitMix64::mix(seed, 2));
  R.points_x_match = matches_with_zero_tail(R.points_x, golden_points_x());
  R.points_y_match = matches_with_zero_tail(R.points_y, golden_points_y());

  R.report_x = mrc::mrc_verdict(R.points_x, 28, cx, samples);
  R.report_y = mrc::mrc_verdict(R.points_y, 28, cy, samples);
  return R;
}

mrc::MRCReport mrc_with_ladder(const curves::CurveModel& model,
                               const std::vector<std::uint32_t>& ladder,
                               long long gamma, unsigned samples, std::uint64_t seed,
                               std::uint32_t* prime_used) {
  if (ladder.empty()) throw Error("DomainViolation", "empty prime ladder");
  std::optional<mrc::MRCReport> last;
  std::string last_err = "no prime attempted";
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    curves::RealizedCurve curve;
    try {
      curve = curves::realize(model, ffla::PrimeModulus(ladder[k]));
    } catch (const Error& e) {
      last_err = e.what();
      continue;
    }
    if (static_cast<long long>(curve.points.points.size()) < gamma) {
      last_err = "fewer rational points than gamma at p=" + std::to_string(ladder[k]);
      continue;
    }
    auto diagram = mrc::generic_diagram(curve, gamma, samples, SplitMix64::mix(seed, k));
    auto rep = mrc::mrc_verdict(diagram, gamma, curve, samples);
    if (prime_used) *prime_used = ladder[k];
    if (rep.q_all_match) return rep;
    last = std::move(rep);  // inconsistent diagonal differences: escalate
  }
  if (last) return *last;
  throw Error("ExhaustedRetries", "no prime in the ladder realized the curve: " + last_err);
}

CanonicalScanResult canonical_mrc_scan(unsigned g,
                                       const std::vector<std::uint32_t>& ladder,
                                       unsigned curve_count, unsigned samples,
                                       std::uint64_t seed) {
  if (g != 4 && g != 5)
    throw Error("DomainViolation", "canonical scan supports genus 4 and 5");
  if (ladder.empty()) throw Error("DomainViolation", "empty prime ladder");
  const curves::HilbertData H{2LL * g - 2, static_cast<long long>(g)};
  const long long lo = H.poly(4), hi = H.poly(5);  // r = 5 window

  auto make_curve = [&](std::uint32_t p, std::uint64_t s0) {
    for (unsigned t = 0; t < 80; ++t) {
      auto model = curves::random_canonical_curve(g, p, SplitMix64::mix(s0, t));
      auto curve = curves::realize(model, ffla::PrimeModulus(p));
      if (static_cast<long long>(curve.points.points.size()) >= hi - 1) return curve;
    }
    throw Error("ExhaustedRetries",
                "no genus-" + std::to_string(g) + " curve with " +
                    std::to_string(hi - 1) + "+ points at p=" + std::to_string(p));
  };

  CanonicalScanResult R;
  for (unsigned c = 0; c < curve_count; ++c) {
    auto curve = make_curve(ladder.front(), SplitMix64::mix(seed, c));
    std::optional<curves::RealizedCurve> escalated;
    for (long long gamma = lo; gamma < hi; ++gamma) {
      auto diag = mrc::generic_diagram(
          curve, gamma, samples, SplitMix64::mix(seed, c * 4096 + (gamma - lo)));
      auto rep = mrc::mrc_verdict(diag, gamma, curve, samples);
      if (!rep.q_all_match && ladder.size() > 1) {
        // one escalation: a fresh curve at the next prime
        if (!escalated)
          escalated = make_curve(ladder[1], SplitMix64::mix(seed ^ 0x9e3779b9ULL, c));
        auto diag2 = mrc::generic_diagram(
            *escalated, gamma, samples,
            SplitMix64::mix(seed, c * 4096 + 2048 + (gamma - lo)));
        rep = mrc::mrc_verdict(diag2, gamma, *escalated, samples);
      }
      if (!rep.mrc_holds)
        R.findings.push_back(rep.curve_id + " p=" + std::to_string(rep.prime) +
                             " gamma=" + std::to_string(gamma) +
                             ": nonzero diagonal product");
      else if (!rep.q_all_match)
        R.findings.push_back(rep.curve_id + " p=" + std::to_string(rep.prime) +
                             " gamma=" + std::to_string(gamma) +
                             ": diagonal difference misses its predicted value");
      R.all_products_zero = R.all_products_zero && rep.mrc_holds;
      R.all_q_match = R.all_q_match && rep.q_all_match;
      R.reports.push_back(std::move(rep));
    }
  }
  return R;
}

IgcScanResult igc_reembedding_experiment(long long target_degree, std::uint32_t prime,
                                         unsigned samples, std::uint64_t seed) {
  if (target_degree != 6 && target_degree != 8)
    throw Error("DomainViolation", "supported re-embedding degrees are 6 and 8");
  const auto base = curves::realize(fermat_quartic(), ffla::PrimeModulus(prime));
  const std::size_t N = base.points.points.size();

  curves::RealizedCurve X;
  if (target_degree == 8) {
    X = curves::reembed(base, 2, {});
  } else {
    // degree 6 = 3*4 - 6: cube of the canonical series minus six general
    // base points; retry the base points until the series separates
    if (N < 27)
      throw Error("TooFewPoints",
                  "need 27+ rational points on the quartic, have " + std::to_string(N));
    std::string last_err = "no attempt made";
    bool ok = false;
    for (unsigned t = 0; t < 80 && !ok; ++t) {
      auto idx = mrc::sample_indices(N, 6, SplitMix64::mix(seed, 0x6ba5e), t);
      try {
        X = curves::reembed(base, 3, idx);
        ok = true;
      } catch (const Error& e) {
        if (e.kind() != "NotVeryAmple") throw;
        last_err = e.what();
      }
    }
    if (!ok)
      throw Error("ExhaustedRetries", "no very ample degree-6 series found: " + last_err);
  }

  IgcScanResult R;
  R.degree = target_degree;
  const auto H = X.hilbert();
  const long long lo = H.poly(3), hi = H.poly(4);  // r = 4 window
  if (static_cast<long long>(X.points.points.size()) < hi - 1)
    throw Error("TooFewPoints", "re-embedded curve has too few points for the window");
  for (long long gamma = lo; gamma < hi; ++gamma) {
    auto diag = mrc::generic_diagram(X, gamma, samples,
                                     SplitMix64::mix(seed, 64 + (gamma - lo)));
    auto rep = mrc::mrc_verdict(diag, gamma, X, samples);
    R.igc_all = R.igc_all && rep.igc_holds;
    R.reports.push_back(std::move(rep));
  }
  return R;
}

FailureScanResult failure_experiment(std::uint32_t prime, unsigned samples,
                                     std::uint64_t seed) {
  FailureScanResult R;
  R.prime = prime;
  R.r = 4;
  R.i0 = 2;

  // genus-4 canonical curve with enough points that the degree-24 image
  // certifies its ideal up to degree 6 (needs 145+ points)
  std::optional<curves::RealizedCurve> base;
  for (unsigned t = 0; t < 40 && !base; ++t) {
    auto model = curves::random_canonical_curve(4, prime, SplitMix64::mix(seed, t));
    auto c = curves::realize(model, ffla::PrimeModulus(prime));
    if (c.points.points.size() >= 145) base = std::move(c);
  }
  if (!base)
    throw Error("ExhaustedRetries",
                "no genus-4 curve with 145+ points at p=" + std::to_string(prime));
  const auto X = curves::reembed(*base, 4, {});
  R.curve_id = X.model.id;

  const auto H = X.hilbert();                      // degree 24, genus 4
  const long long lo = H.poly(3), hi = H.poly(4);  // [69, 93)
  const long long start = 90;  // the construction's predicted failure point
  std::vector<long long> order{start};
  for (long long step = 1; start + step < hi || start - step >= lo; ++step) {
    if (start + step < hi) order.push_back(start + step);
    if (start - step >= lo) order.push_back(start - step);
  }

  for (long long gamma : order) {
    auto [top, bot] = mrc::generic_tail_pair_ideal(
        X, gamma, R.i0, samples, SplitMix64::mix(seed, 0xfa17u + gamma));
    R.scanned.push_back({gamma, top, bot});
    if (top > 0 && bot > 0) {
      R.found = true;
      R.gamma_found = gamma;
      break;
    }
  }
  return R;
}

}  // namespace mrclab::experiments
