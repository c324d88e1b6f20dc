#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mrclab/ffla.hpp"
#include "mrclab/polyring.hpp"

namespace mrclab::curves {

using Point = std::vector<std::uint32_t>;

/// Hilbert polynomial data of an embedded curve: P(T) = d*T + 1 - g.
struct HilbertData {
  long long degree;
  long long genus;
  long long poly(long long T) const { return degree * T + 1 - genus; }
};

struct Provenance {
  std::string curve_id;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
};

/// Distinct points of P^n(F_p), each scaled so its first nonzero coordinate
/// is 1. Fixing representatives makes multiplication by X_s act diagonally
/// on value vectors downstream.
struct EmbeddedPointSet {
  unsigned n = 0;
  std::vector<Point> points;
  Provenance provenance;
};

/// Scales P to the canonical representative; false if P is the zero vector.
bool normalize_point(Point& P, const ffla::PrimeModulus& mod);

/// Rational curve u,v -> (f_0 : ... : f_n), forms stored with integer
/// coefficients (u^d first) so one model serves every prime in a ladder.
struct ParametricData {
  unsigned n = 0;
  unsigned degree = 0;
  std::vector<std::vector<long long>> forms;
};

struct CITerm {
  std::vector<unsigned> exps;
  long long c = 0;
};

struct CompleteIntersectionData {
  unsigned n = 0;
  std::vector<std::vector<CITerm>> equations;
};

struct CurveModel {
  std::string id;
  std::variant<std::monostate, ParametricData, CompleteIntersectionData> data;
  long long genus = 0;
  long long degree = 0;
  unsigned regularity = 0;
  bool canonical = false;  // complete canonical embedding, degree 2g-2 in P^{g-1}

  unsigned ambient() const;
  HilbertData hilbert() const { return {degree, genus}; }
};

std::vector<polyring::HomogeneousForm> equations_mod_p(const CompleteIntersectionData& ci,
                                                       ffla::PrimeModulus mod);

/// All F_p-rational points of the model, normalized and deduplicated.
/// Parametric: verifies the f_k share no common factor and the map is
/// injective on P^1(F_p). Complete intersection: full P^n scan, n <= 4.
EmbeddedPointSet enumerate_points(const CurveModel& model, ffla::PrimeModulus mod);

/// Jacobian has rank n-1 at every enumerated rational point.
bool is_smooth(const CurveModel& model, ffla::PrimeModulus mod);

/// Seeded random canonical model: g=4 quadric+cubic in P^3, g=5 three
/// quadrics in P^4. Resamples until smooth with point count in the Weil
/// window; deterministic in (g, p, seed).
CurveModel random_canonical_curve(unsigned g, std::uint32_t p, std::uint64_t seed);

/// A curve pinned to a prime: full rational point list plus jmax, the largest
/// degree at which "vanishes on all listed points" identifies the ideal slice
/// (guarded by point count > degree * jmax).
struct RealizedCurve {
  CurveModel model;
  std::uint32_t prime = 0;
  EmbeddedPointSet points;
  unsigned jmax = 0;
  bool synthetic = false;  // only the point list defines the curve (re-embeddings)

  unsigned n() const { return points.n; }
  HilbertData hilbert() const { return model.hilbert(); }
};

RealizedCurve realize(const CurveModel& model, ffla::PrimeModulus mod);

/// Re-embeds by the complete series of degree-k forms vanishing on the base
/// points (indices into curve.points). New degree d' = k*d - |base|; new
/// ambient dimension d' - g by Riemann-Roch (d' > 2g-2 required). Base points
/// are dropped from the returned point list.
RealizedCurve reembed(const RealizedCurve& curve, unsigned k,
                      const std::vector<std::size_t>& base_indices);

}  // namespace mrclab::curves
