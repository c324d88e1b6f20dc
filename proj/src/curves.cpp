#include "mrclab/curves.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mrclab/rng.hpp"

namespace mrclab::curves {

namespace {

using ffla::PrimeModulus;

std::vector<std::uint32_t> reduce_coeffs(const std::vector<long long>& c,
                                         const PrimeModulus& mod) {
  std::vector<std::uint32_t> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = mod.reduce(c[k]);
  return out;
}

// Coefficients high-degree first; leading zeros trimmed.
std::vector<std::uint32_t> trim(std::vector<std::uint32_t> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  return {v.begin() + lead, v.end()};
}

std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    const PrimeModulus& mod) {
  a = trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t f = mod.mul(a[0], mod.inv(b[0]));
    for (std::size_t k = 0; k < b.size(); ++k)
      a[k] = mod.sub(a[k], mod.mul(f, b[k]));
    a = trim(std::move(a));
  }
  return a;
}

std::vector<std::uint32_t> poly_gcd(std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> b,
                                    const PrimeModulus& mod) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_mod(a, b, mod);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint32_t eval_binary_form(const std::vector<std::uint32_t>& c, std::uint32_t u,
                               std::uint32_t v, const PrimeModulus& mod) {
  // c[k] multiplies u^{d-k} v^k
  const std::size_t d = c.size() - 1;
  std::uint32_t acc = 0, vp = 1;
  std::vector<std::uint32_t> up(d + 1);
  up[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) up[k] = mod.mul(up[k - 1], u);
  for (std::size_t k = 0; k <= d; ++k) {
    acc = mod.add(acc, mod.mul(c[k], mod.mul(up[d - k], vp)));
    vp = mod.mul(vp, v);
  }
  return acc;
}

EmbeddedPointSet enumerate_parametric(const ParametricData& P, const CurveModel& model,
                                      PrimeModulus mod) {
  std::vector<std::vector<std::uint32_t>> forms;
  for (const auto& f : P.forms) {
    if (f.size() != P.degree + 1)
      throw Error("ShapeMismatch", "parametric form has wrong coefficient count");
    forms.push_back(reduce_coeffs(f, mod));
  }
  if (forms.size() != P.n + 1)
    throw Error("ShapeMismatch", "parametric model needs n+1 forms");

  // Common-factor check: v divides all forms iff every u^d coefficient is 0;
  // any other common factor shows up as a nonconstant gcd of the
  // dehomogenized (v=1) polynomials.
  bool all_lead_zero = true;
  for (const auto& f : forms) all_lead_zero = all_lead_zero && f[0] == 0;
  if (all_lead_zero)
    throw Error("NonInjectiveParametrization", "forms share the common factor v");
  std::vector<std::uint32_t> g = trim(forms[0]);
  for (std::size_t k = 1; k < forms.size(); ++k) g = poly_gcd(g, forms[k], mod);
  if (g.size() > 1)
    throw Error("NonInjectiveParametrization", "forms share a nonconstant common factor");

  EmbeddedPointSet out;
  out.n = P.n;
  out.provenance.curve_id = model.id;
  out.provenance.prime = mod.value();
  std::set<Point> seen;
  auto emit = [&](std::uint32_t u, std::uint32_t v) {
    Point pt(P.n + 1);
    for (unsigned k = 0; k <= P.n; ++k) pt[k] = eval_binary_form(forms[k], u, v, mod);
    if (!normalize_point(pt, mod))
      throw Error("NonInjectiveParametrization", "parameter value is a base point");
    if (!seen.insert(pt).second)
      throw Error("NonInjectiveParametrization",
                  "two parameter values map to the same point");
    out.points.push_back(std::move(pt));
  };
  for (std::uint32_t t = 0; t < mod.value(); ++t) emit(1, t);
  emit(0, 1);
  return out;
}

EmbeddedPointSet enumerate_ci(const CompleteIntersectionData& ci, const CurveModel& model,
                              PrimeModulus mod) {
  if (ci.n > 4)
    throw Error("DomainViolation", "full projective scan supported only for n <= 4");
  auto eqs = equations_mod_p(ci, mod);
  const std::uint32_t p = mod.value();

  // flattened term lists; avoids per-point form-evaluation overhead
  struct FlatTerm {
    std::vector<unsigned> exps;
    std::uint32_t c;
  };
  std::vector<std::vector<FlatTerm>> flat;
  unsigned max_deg = 0;
  for (const auto& f : eqs) {
    std::vector<FlatTerm> terms;
    for (const auto& [m, c] : f.terms()) terms.push_back({m.exps, c});
    max_deg = std::max(max_deg, f.degree());
    flat.push_back(std::move(terms));
  }

  EmbeddedPointSet out;
  out.n = ci.n;
  out.provenance.curve_id = model.id;
  out.provenance.prime = p;
  Point pt(ci.n + 1, 0);
  std::vector<std::vector<std::uint32_t>> powers(ci.n + 1,
                                                 std::vector<std::uint32_t>(max_deg + 1, 1));
  for (unsigned lead = 0; lead <= ci.n; ++lead) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    const unsigned nfree = ci.n - lead;
    std::vector<std::uint32_t> ctr(nfree, 0);
    while (true) {
      for (unsigned k = 0; k < nfree; ++k) pt[lead + 1 + k] = ctr[k];
      for (unsigned v = 0; v <= ci.n; ++v)
        for (unsigned e = 1; e <= max_deg; ++e)
          powers[v][e] = mod.mul(powers[v][e - 1], pt[v]);
      bool on = true;
      for (const auto& terms : flat) {
        std::uint64_t acc = 0;
        for (const auto& t : terms) {
          std::uint64_t val = t.c;
          for (unsigned v = 0; v <= ci.n; ++v)
            if (t.exps[v]) val = val * powers[v][t.exps[v]] % p;
          acc += val;
        }
        if (acc % p != 0) {
          on = false;
          break;
        }
      }
      if (on) out.points.push_back(pt);
      unsigned k = nfree;
      while (k > 0) {
        if (++ctr[k - 1] < p) break;
        ctr[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

long long weil_halfwidth(long long g, std::uint32_t p) {
  return 2 * g * static_cast<long long>(std::ceil(std::sqrt(double(p))));
}

}  // namespace

unsigned CurveModel::ambient() const {
  if (std::holds_alternative<ParametricData>(data))
    return std::get<ParametricData>(data).n;
  if (std::holds_alternative<CompleteIntersectionData>(data))
    return std::get<CompleteIntersectionData>(data).n;
  throw Error("DomainViolation", "synthetic curve model has no stored equations");
}

bool normalize_point(Point& P, const ffla::PrimeModulus& mod) {
  std::size_t lead = 0;
  while (lead < P.size() && P[lead] == 0) ++lead;
  if (lead == P.size()) return false;
  const std::uint32_t inv = mod.inv(P[lead]);
  for (auto& x : P) x = mod.mul(x, inv);
  return true;
}

std::vector<polyring::HomogeneousForm> equations_mod_p(const CompleteIntersectionData& ci,
                                                       ffla::PrimeModulus mod) {
  std::vector<polyring::HomogeneousForm> eqs;
  for (const auto& eq : ci.equations) {
    if (eq.empty()) throw Error("ShapeMismatch", "empty defining equation");
    unsigned deg = 0;
    for (unsigned e : eq[0].exps) deg += e;
    polyring::HomogeneousForm f(ci.n, deg, mod);
    for (const auto& term : eq) f.add_term(term.exps, mod.reduce(term.c));
    if (f.is_zero())
      throw Error("ShapeMismatch", "defining equation reduces to zero mod p");
    eqs.push_back(std::move(f));
  }
  return eqs;
}

EmbeddedPointSet enumerate_points(const CurveModel& model, ffla::PrimeModulus mod) {
  EmbeddedPointSet out;
  if (std::holds_alternative<ParametricData>(model.data))
    out = enumerate_parametric(std::get<ParametricData>(model.data), model, mod);
  else if (std::holds_alternative<CompleteIntersectionData>(model.data))
    out = enumerate_ci(std::get<CompleteIntersectionData>(model.data), model, mod);
  else
    throw Error("DomainViolation", "cannot enumerate a synthetic curve model");

  const long long N = static_cast<long long>(out.points.size());
  const long long low = mod.value() + 1 - weil_halfwidth(model.genus, mod.value());
  if (N < low)
    throw Error("TooFewPoints", model.id + ": " + std::to_string(N) +
                                    " rational points, below the Weil window");
  return out;
}

bool is_smooth(const CurveModel& model, ffla::PrimeModulus mod) {
  if (!std::holds_alternative<CompleteIntersectionData>(model.data))
    throw Error("DomainViolation", "smoothness check applies to complete intersections");
  const auto& ci = std::get<CompleteIntersectionData>(model.data);
  auto eqs = equations_mod_p(ci, mod);
  std::vector<std::vector<polyring::HomogeneousForm>> jac;
  for (const auto& f : eqs) jac.push_back(f.partials());

  auto pts = enumerate_ci(ci, model, mod);
  ffla::MatrixGF J(eqs.size(), ci.n + 1, mod);
  for (const auto& P : pts.points) {
    for (std::size_t r = 0; r < jac.size(); ++r)
      for (unsigned c = 0; c <= ci.n; ++c) J.set(r, c, jac[r][c].evaluate(P));
    if (ffla::rank(J) != ci.n - 1) return false;
  }
  return true;
}

CurveModel random_canonical_curve(unsigned g, std::uint32_t p, std::uint64_t seed) {
  if (g != 4 && g != 5)
    throw Error("DomainViolation", "canonical sampling implemented for genus 4 and 5");
  ffla::PrimeModulus mod(p);
  SplitMix64 rng(SplitMix64::mix(seed, std::uint64_t(g) << 32 | p));

  auto random_eq = [&](unsigned n, unsigned deg) {
    std::vector<CITerm> eq;
    for (const auto& m : polyring::monomial_basis(n, deg))
      eq.push_back({m.exps, static_cast<long long>(rng.below(p))});
    return eq;
  };

  const int budget = 400;
  for (int attempt = 0; attempt < budget; ++attempt) {
    CurveModel model;
    model.genus = g;
    model.degree = 2 * g - 2;
    model.regularity = 4;
    model.canonical = true;
    model.id = "canonical-g" + std::to_string(g) + "-p" + std::to_string(p) + "-s" +
               std::to_string(seed) + "-t" + std::to_string(attempt);
    CompleteIntersectionData ci;
    if (g == 4) {
      ci.n = 3;
      ci.equations = {random_eq(3, 2), random_eq(3, 3)};
    } else {
      ci.n = 4;
      ci.equations = {random_eq(4, 2), random_eq(4, 2), random_eq(4, 2)};
    }
    model.data = ci;

    EmbeddedPointSet pts;
    try {
      pts = enumerate_points(model, mod);
    } catch (const Error&) {
      continue;
    }
    const long long N = static_cast<long long>(pts.points.size());
    if (std::llabs(N - (long long)(p + 1)) > weil_halfwidth(g, p)) continue;
    if (!is_smooth(model, mod)) continue;
    return model;
  }
  throw Error("ExhaustedRetries", "no smooth canonical model found within budget");
}

RealizedCurve realize(const CurveModel& model, ffla::PrimeModulus mod) {
  RealizedCurve R;
  R.model = model;
  R.prime = mod.value();
  R.points = enumerate_points(model, mod);
  if (model.degree > 0)
    R.jmax = static_cast<unsigned>((static_cast<long long>(R.points.points.size()) - 1) /
                                   model.degree);
  return R;
}

}  // namespace mrclab::curves
