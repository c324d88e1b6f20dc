#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "mrclab/curves.hpp"
#include "mrclab/ffla.hpp"

namespace mrclab::pointsets {

/// gamma x C(n+t,n) matrix; entry (k,m) = m-th graded-lex monomial of degree t
/// evaluated at the fixed representative of the k-th point.
ffla::MatrixGF evaluation_matrix(const curves::EmbeddedPointSet& pts, unsigned t,
                                 ffla::PrimeModulus mod);

/// H_Gamma(t) = rank of the evaluation matrix.
std::size_t hilbert_function(const curves::EmbeddedPointSet& pts, unsigned t,
                             ffla::PrimeModulus mod);

/// Echelonized basis of a degree-j graded piece realized as value vectors
/// inside GF(p)^gamma. Rows are in reduced echelon form with known pivots, so
/// coordinate extraction is a pivot lookup plus an exactness check.
struct QuotientBasis {
  unsigned degree = 0;
  ffla::MatrixGF basis;  // dim x gamma, reduced echelon rows
  std::vector<std::size_t> pivots;

  QuotientBasis(unsigned deg, ffla::MatrixGF b, std::vector<std::size_t> piv)
      : degree(deg), basis(std::move(b)), pivots(std::move(piv)) {}

  std::size_t dim() const { return pivots.size(); }
  std::size_t space_dim() const { return basis.cols(); }

  /// Coordinates of v against the rows; throws ImageOutsideTarget if v is not
  /// in the span.
  std::vector<std::uint32_t> coordinates(std::span<const std::uint32_t> v) const;
  bool contains(std::span<const std::uint32_t> v) const;
};

/// Echelonizes a spanning set of row vectors (discarding dependent ones).
QuotientBasis echelon_span(unsigned degree, const ffla::MatrixGF& spanning);

QuotientBasis quotient_basis(const curves::EmbeddedPointSet& pts, unsigned j,
                             ffla::PrimeModulus mod);

/// Graded pieces N_j of the coordinate ring of a point set, built
/// multiplicatively: N_0 = <all-ones>, N_j = sum_s D_s N_{j-1} where D_s is
/// the diagonal action of X_s on value vectors. Equal to the evaluation-map
/// image in every degree since the ring is generated in degree 1.
class QuotientTower {
 public:
  QuotientTower(const curves::EmbeddedPointSet& pts, ffla::PrimeModulus mod);

  const QuotientBasis& at(unsigned j) const;  // cached, thread-safe
  std::span<const std::uint32_t> diagonal(unsigned s) const { return diag_[s]; }
  unsigned nvars() const { return static_cast<unsigned>(diag_.size()); }
  std::size_t gamma() const { return gamma_; }
  const ffla::PrimeModulus& modulus() const { return mod_; }

  /// Value vector of X_s * f given the value vector of f.
  std::vector<std::uint32_t> multiply(unsigned s, std::span<const std::uint32_t> v) const;

 private:
  ffla::PrimeModulus mod_;
  std::size_t gamma_;
  std::vector<std::vector<std::uint32_t>> diag_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<QuotientBasis>> cache_;
};

/// Basis of {v in tower.at(t) : v[k] = 0 for all k in subset_indices} -- the
/// degree-t slice of the ideal of the sub-point-set inside the ambient ring.
QuotientBasis ideal_slice(const QuotientTower& tower, unsigned t,
                          const std::vector<std::size_t>& subset_indices);

}  // namespace mrclab::pointsets
