#include <algorithm>
#include <set>

#include "mrclab/curves.hpp"
#include "mrclab/pointsets.hpp"

namespace mrclab::curves {

RealizedCurve reembed(const RealizedCurve& curve, unsigned k,
                      const std::vector<std::size_t>& base_indices) {
  const ffla::PrimeModulus mod(curve.prime);
  if (k > curve.jmax)
    throw Error("DegreeGuardViolated",
                "re-embedding degree exceeds the ideal-identification bound");
  const long long d2 =
      static_cast<long long>(k) * curve.model.degree - (long long)base_indices.size();
  if (d2 <= 2 * curve.model.genus - 2)
    throw Error("DomainViolation", "re-embedding series must be nonspecial (d' > 2g-2)");

  pointsets::QuotientTower tower(curve.points, mod);
  pointsets::QuotientBasis series = pointsets::ideal_slice(tower, k, base_indices);

  const long long expected = d2 - curve.model.genus + 1;  // h^0 by Riemann-Roch
  if (static_cast<long long>(series.dim()) != expected)
    throw Error("NotVeryAmple", "series dimension " + std::to_string(series.dim()) +
                                    " differs from Riemann-Roch value " +
                                    std::to_string(expected));

  std::set<std::size_t> base(base_indices.begin(), base_indices.end());
  RealizedCurve out;
  out.model.id = curve.model.id + "-reembed-k" + std::to_string(k) + "-b" +
                 std::to_string(base_indices.size());
  out.model.genus = curve.model.genus;
  out.model.degree = d2;
  // nonspecial projectively normal embedding: H^1(I(t)) = 0 for all t and
  // H^1(O(t)) = 0 for t >= 1, but H^1(O) = g keeps the regularity at 3
  out.model.regularity = curve.model.genus > 0 ? 3 : 2;
  out.prime = curve.prime;
  out.synthetic = true;
  out.points.n = static_cast<unsigned>(series.dim()) - 1;
  out.points.provenance = curve.points.provenance;
  out.points.provenance.curve_id = out.model.id;

  std::set<Point> seen;
  for (std::size_t idx = 0; idx < curve.points.points.size(); ++idx) {
    if (base.count(idx)) continue;
    Point img(series.dim());
    for (std::size_t s = 0; s < series.dim(); ++s) img[s] = series.basis.at(s, idx);
    if (!normalize_point(img, mod))
      throw Error("NotVeryAmple", "a point maps to the zero vector");
    if (!seen.insert(img).second)
      throw Error("NotVeryAmple", "two points share the same image");
    out.points.points.push_back(std::move(img));
  }
  out.jmax = static_cast<unsigned>(
      (static_cast<long long>(out.points.points.size()) - 1) / d2);

  // The series can fail to separate a conjugate point pair invisible to the
  // rational-collision check above; the image is then a nodal curve with a
  // different Hilbert polynomial. Catch it by the quadric count when the
  // point count certifies degree 2.
  if (out.jmax >= 2) {
    const long long m = static_cast<long long>(series.dim()) - 1;
    const long long expected_h2 =
        std::min(2 * d2 + 1 - curve.model.genus, (m + 2) * (m + 1) / 2);
    const long long h2 = static_cast<long long>(
        pointsets::hilbert_function(out.points, 2, mod));
    if (h2 != expected_h2)
      throw Error("NotVeryAmple", "quadric count " + std::to_string(h2) +
                                      " differs from the smooth-image value " +
                                      std::to_string(expected_h2));
  }
  return out;
}

}  // namespace mrclab::curves
