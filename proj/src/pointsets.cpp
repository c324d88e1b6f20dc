#include "mrclab/pointsets.hpp"

#include <algorithm>

#include "mrclab/polyring.hpp"

namespace mrclab::pointsets {

using ffla::MatrixGF;
using ffla::PrimeModulus;

MatrixGF evaluation_matrix(const curves::EmbeddedPointSet& pts, unsigned t,
                           PrimeModulus mod) {
  const auto basis = polyring::monomial_basis(pts.n, t);
  MatrixGF M(pts.points.size(), basis.size(), mod);
  for (std::size_t k = 0; k < pts.points.size(); ++k) {
    const auto& P = pts.points[k];
    // powers[v][e] = P[v]^e
    std::vector<std::vector<std::uint32_t>> powers(pts.n + 1);
    for (unsigned v = 0; v <= pts.n; ++v) {
      powers[v].resize(t + 1);
      powers[v][0] = 1;
      for (unsigned e = 1; e <= t; ++e) powers[v][e] = mod.mul(powers[v][e - 1], P[v]);
    }
    for (std::size_t m = 0; m < basis.size(); ++m) {
      std::uint32_t val = 1;
      for (unsigned v = 0; v <= pts.n; ++v) val = mod.mul(val, powers[v][basis[m].exps[v]]);
      M.set(k, m, val);
    }
  }
  return M;
}

std::size_t hilbert_function(const curves::EmbeddedPointSet& pts, unsigned t,
                             PrimeModulus mod) {
  return ffla::rank(evaluation_matrix(pts, t, mod));
}

std::vector<std::uint32_t> QuotientBasis::coordinates(
    std::span<const std::uint32_t> v) const {
  if (v.size() != basis.cols())
    throw Error("ShapeMismatch", "coordinate extraction: wrong vector length");
  const PrimeModulus& mod = basis.modulus();
  std::vector<std::uint32_t> c(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = v[pivots[k]];
  // exactness: v must equal the pivot-coordinate combination of the rows
  for (std::size_t col = 0; col < basis.cols(); ++col) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      acc += std::uint64_t(c[k]) * basis.at(k, col) % mod.value();
    if (acc % mod.value() != v[col])
      throw Error("ImageOutsideTarget",
                  "vector not in the span of the quotient basis at degree " +
                      std::to_string(degree));
  }
  return c;
}

bool QuotientBasis::contains(std::span<const std::uint32_t> v) const {
  try {
    coordinates(v);
    return true;
  } catch (const Error&) {
    return false;
  }
}

QuotientBasis echelon_span(unsigned degree, const MatrixGF& spanning) {
  ffla::Echelon e = ffla::reduced_echelon(spanning);
  MatrixGF b(e.pivots.size(), spanning.cols(), spanning.modulus());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < spanning.cols(); ++c) b.set(r, c, e.mat.at(r, c));
  return QuotientBasis(degree, std::move(b), e.pivots);
}

QuotientBasis quotient_basis(const curves::EmbeddedPointSet& pts, unsigned j,
                             PrimeModulus mod) {
  return echelon_span(j, evaluation_matrix(pts, j, mod).transpose());
}

QuotientTower::QuotientTower(const curves::EmbeddedPointSet& pts, PrimeModulus mod)
    : mod_(mod), gamma_(pts.points.size()) {
  diag_.resize(pts.n + 1);
  for (unsigned s = 0; s <= pts.n; ++s) {
    diag_[s].resize(gamma_);
    for (std::size_t k = 0; k < gamma_; ++k) diag_[s][k] = pts.points[k][s];
  }
}

std::vector<std::uint32_t> QuotientTower::multiply(
    unsigned s, std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> out(gamma_);
  for (std::size_t k = 0; k < gamma_; ++k) out[k] = mod_.mul(diag_[s][k], v[k]);
  return out;
}

const QuotientBasis& QuotientTower::at(unsigned j) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (j < cache_.size() && cache_[j]) return *cache_[j];
  if (cache_.size() <= j) cache_.resize(j + 1);
  for (unsigned t = 0; t <= j; ++t) {
    if (cache_[t]) continue;
    if (t == 0) {
      MatrixGF ones(1, gamma_, mod_);
      for (std::size_t k = 0; k < gamma_; ++k) ones.set(0, k, 1);
      cache_[t] = std::make_unique<QuotientBasis>(echelon_span(0, ones));
      continue;
    }
    const QuotientBasis& prev = *cache_[t - 1];
    MatrixGF spanning(prev.dim() * diag_.size(), gamma_, mod_);
    std::size_t r = 0;
    for (unsigned s = 0; s < diag_.size(); ++s)
      for (std::size_t b = 0; b < prev.dim(); ++b, ++r)
        for (std::size_t k = 0; k < gamma_; ++k)
          spanning.set(r, k, mod_.mul(diag_[s][k], prev.basis.at(b, k)));
    cache_[t] = std::make_unique<QuotientBasis>(echelon_span(t, spanning));
  }
  return *cache_[j];
}

QuotientBasis ideal_slice(const QuotientTower& tower, unsigned t,
                          const std::vector<std::size_t>& subset_indices) {
  const QuotientBasis& N = tower.at(t);
  const PrimeModulus& mod = tower.modulus();
  // rows of N restricted to the subset columns; kernel combos vanish there
  MatrixGF A(subset_indices.size(), N.dim(), mod);
  for (std::size_t r = 0; r < subset_indices.size(); ++r)
    for (std::size_t b = 0; b < N.dim(); ++b)
      A.set(r, b, N.basis.at(b, subset_indices[r]));
  auto combos = ffla::kernel_basis(A);
  MatrixGF spanning(combos.size(), N.space_dim(), mod);
  for (std::size_t r = 0; r < combos.size(); ++r)
    for (std::size_t col = 0; col < N.space_dim(); ++col) {
      std::uint64_t acc = 0;
      for (std::size_t b = 0; b < N.dim(); ++b)
        acc += std::uint64_t(combos[r][b]) * N.basis.at(b, col) % mod.value();
      spanning.set(r, col, static_cast<std::uint32_t>(acc % mod.value()));
    }
  return echelon_span(t, spanning);
}

}  // namespace mrclab::pointsets
