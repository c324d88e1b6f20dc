#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mrclab/curves.hpp"
#include "mrclab/pointsets.hpp"

namespace mrclab::koszul {

/// Size-i subsets of {0..nvars-1}, ascending inside each subset, listed in
/// colex order (compare largest elements first). This order is the indexing
/// convention for every wedge factor in the complex.
std::vector<std::vector<unsigned>> index_subsets(unsigned nvars, unsigned i);

/// A nonnegatively graded module realized as value-vector subspaces of
/// GF(p)^gamma with the variables acting as the diagonal operators of a
/// quotient tower. Covers the coordinate ring of a point set and the ideal
/// of a sub-point-set inside it.
class ValueModule {
 public:
  static ValueModule ring(std::shared_ptr<const pointsets::QuotientTower> tower);
  static ValueModule ideal(std::shared_ptr<const pointsets::QuotientTower> tower,
                           std::vector<std::size_t> vanish_indices);

  /// Degree-j piece; nullptr means the zero space (j < 0 included).
  const pointsets::QuotientBasis* piece(int j) const;
  unsigned nvars() const { return tower_->nvars(); }
  const ffla::PrimeModulus& modulus() const { return tower_->modulus(); }
  std::vector<std::uint32_t> multiply(unsigned s,
                                      std::span<const std::uint32_t> v) const {
    return tower_->multiply(s, v);
  }

 private:
  explicit ValueModule(std::shared_ptr<const pointsets::QuotientTower> tower)
      : tower_(std::move(tower)) {}
  struct IdealCache {
    std::mutex mu;
    std::map<int, std::unique_ptr<pointsets::QuotientBasis>> pieces;
  };
  std::shared_ptr<const pointsets::QuotientTower> tower_;
  bool is_ideal_ = false;
  std::vector<std::size_t> vanish_;
  std::shared_ptr<IdealCache> cache_ = std::make_shared<IdealCache>();
};

/// Matrix of delta: wedge^i V (x) M_j -> wedge^{i-1} V (x) M_{j+1}, with
/// delta(e_S (x) w) = sum_k (-1)^k e_{S minus s_k} (x) X_{s_k} w. Rows index
/// the domain basis (subset-major), columns the codomain, coordinates taken
/// against the echelonized quotient bases.
ffla::MatrixGF differential(const ValueModule& M, unsigned i, int j);

/// Per-module Betti computations with a shared rank cache across cells.
class KoszulCalculator {
 public:
  explicit KoszulCalculator(const ValueModule& M) : M_(M) {}

  /// rank of differential (i, j) -> (i-1, j+1); cached, thread-safe.
  std::size_t rank_d(unsigned i, int j);

  long long piece_dim(int j) const;

  /// b_{i,j} = dim(wedge^i V (x) M_j) - rank_d(i,j) - rank_d(i+1,j-1).
  long long betti(unsigned i, int j);

  const ValueModule& module() const { return M_; }

 private:
  const ValueModule& M_;
  std::mutex mu_;
  std::map<std::pair<unsigned, int>, std::size_t> cache_;
};

struct BettiDiagram {
  unsigned n = 0;                           // ambient dimension
  std::vector<std::vector<long long>> rows; // rows[j][i], i = 0..n+1
  std::string source;

  long long at(unsigned i, unsigned j) const { return rows[j][i]; }
  std::string text() const;
  std::string json_rows() const;
  std::string csv() const;
  static BettiDiagram entrywise_min(const std::vector<BettiDiagram>& diagrams);
  bool operator==(const BettiDiagram& o) const { return n == o.n && rows == o.rows; }
};

/// One cell b_{i,j} of the point set's diagram. Convenience wrapper; use a
/// KoszulCalculator when computing many cells of the same module.
long long betti_number(const curves::EmbeddedPointSet& pts, unsigned i, int j,
                       ffla::PrimeModulus mod);

/// Full table for 0 <= i <= n+1, 0 <= j <= J. Cells computed in parallel
/// after the graded pieces are cached.
BettiDiagram betti_diagram(const curves::EmbeddedPointSet& pts, unsigned J,
                           ffla::PrimeModulus mod);

/// Diagram of the curve's coordinate ring from its full rational point list;
/// requires J + 2 <= jmax so every graded piece used is certified.
BettiDiagram curve_betti_diagram(const curves::RealizedCurve& curve, unsigned J);

}  // namespace mrclab::koszul
