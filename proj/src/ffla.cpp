#include "mrclab/ffla.hpp"

#include <algorithm>
#include <limits>

namespace mrclab::ffla {

namespace {

bool miller_rabin(std::uint32_t n, std::uint32_t a) {
  if (n % a == 0) return n == a;
  std::uint32_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  std::uint64_t x = 1, base = a % n, e = d;
  while (e) {
    if (e & 1) x = x * base % n;
    base = base * base % n;
    e >>= 1;
  }
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Deterministic for n < 3,215,031,751 with bases 2,3,5,7.
bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
    if (n == a) return true;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw Error("InvalidModulus", "p must be an odd prime with 2 < p < 2^31, got " +
                                      std::to_string(p));
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t x = 1, base = a % p_;
  while (e) {
    if (e & 1) x = x * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(x);
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("DivisionByZero", "inverse of 0 mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

MatrixGF MatrixGF::identity(std::size_t n, PrimeModulus mod) {
  MatrixGF m(n, n, mod);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(cols_, rows_, mod_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

std::vector<std::uint32_t> MatrixGF::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw Error("ShapeMismatch", "apply: vector length != cols");
  std::vector<std::uint32_t> y(rows_, 0);
  const std::uint64_t p = mod_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto rw = row(r);
    // (p-1)^2 < 2^62: reduce periodically
    const std::size_t chunk = 512;
    for (std::size_t c0 = 0; c0 < cols_; c0 += chunk) {
      std::size_t c1 = std::min(cols_, c0 + chunk);
      for (std::size_t c = c0; c < c1; ++c) acc += std::uint64_t(rw[c]) * v[c] % p;
      acc %= p;
    }
    y[r] = static_cast<std::uint32_t>(acc);
  }
  return y;
}

MatrixGF MatrixGF::stacked(const MatrixGF& other) const {
  if (other.cols_ != cols_ || other.mod_ != mod_)
    throw Error("ShapeMismatch", "stacked: incompatible matrices");
  MatrixGF s(rows_ + other.rows_, cols_, mod_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.set(r, c, at(r, c));
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) s.set(rows_ + r, c, other.at(r, c));
  return s;
}

std::size_t rank(const MatrixGF& m) {
  const std::uint64_t p = m.modulus().value();
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;

  // Work rows in uint64 with delayed reduction; bound[i] tracks the largest
  // possible entry so reductions happen only when an overflow could occur.
  std::vector<std::vector<std::uint64_t>> rows(R);
  std::vector<std::uint64_t> bound(R, p - 1);
  for (std::size_t r = 0; r < R; ++r) {
    rows[r].assign(C, 0);
    auto src = m.row(r);
    for (std::size_t c = 0; c < C; ++c) rows[r][c] = src[c];
  }
  const std::uint64_t limit = std::uint64_t(1) << 63;
  const PrimeModulus& mod = m.modulus();

  std::size_t rk = 0;
  for (std::size_t col = 0; col < C && rk < R; ++col) {
    std::size_t piv = R;
    for (std::size_t i = rk; i < R; ++i) {
      if (rows[i][col] % p != 0) {
        piv = i;
        break;
      }
    }
    if (piv == R) continue;
    std::swap(rows[piv], rows[rk]);
    std::swap(bound[piv], bound[rk]);

    auto& pr = rows[rk];
    for (auto& x : pr) x %= p;
    bound[rk] = p - 1;
    const std::uint64_t inv = mod.inv(static_cast<std::uint32_t>(pr[col]));
    for (std::size_t c = col; c < C; ++c) pr[c] = pr[c] * inv % p;

    const std::uint64_t grow = (p - 1) * (p - 1);
    for (std::size_t i = rk + 1; i < R; ++i) {
      std::uint64_t t = rows[i][col] % p;
      if (t == 0) continue;
      if (bound[i] + grow >= limit || bound[i] + grow < bound[i]) {
        for (auto& x : rows[i]) x %= p;
        bound[i] = p - 1;
      }
      const std::uint64_t f = p - t;
      auto& ri = rows[i];
      for (std::size_t c = col; c < C; ++c) ri[c] += f * pr[c];
      bound[i] += f * (p - 1);
      ri[col] = 0;
    }
    ++rk;
  }
  return rk;
}

Echelon reduced_echelon(const MatrixGF& m) {
  const PrimeModulus& mod = m.modulus();
  const std::uint64_t p = mod.value();
  const std::size_t R = m.rows(), C = m.cols();

  std::vector<std::vector<std::uint64_t>> rows(R);
  std::vector<std::uint64_t> bound(R, p - 1);
  for (std::size_t r = 0; r < R; ++r) {
    rows[r].assign(C, 0);
    auto src = m.row(r);
    for (std::size_t c = 0; c < C; ++c) rows[r][c] = src[c];
  }
  const std::uint64_t limit = std::uint64_t(1) << 63;
  const std::uint64_t grow = (p - 1) * (p - 1);

  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < C && rk < R; ++col) {
    std::size_t piv = R;
    for (std::size_t i = rk; i < R; ++i) {
      if (rows[i][col] % p != 0) {
        piv = i;
        break;
      }
    }
    if (piv == R) continue;
    std::swap(rows[piv], rows[rk]);
    std::swap(bound[piv], bound[rk]);
    auto& pr = rows[rk];
    for (auto& x : pr) x %= p;
    bound[rk] = p - 1;
    const std::uint64_t inv = mod.inv(static_cast<std::uint32_t>(pr[col]));
    for (std::size_t c = col; c < C; ++c) pr[c] = pr[c] * inv % p;
    for (std::size_t i = rk + 1; i < R; ++i) {
      std::uint64_t t = rows[i][col] % p;
      if (t == 0) continue;
      if (bound[i] + grow >= limit || bound[i] + grow < bound[i]) {
        for (auto& x : rows[i]) x %= p;
        bound[i] = p - 1;
      }
      const std::uint64_t f = p - t;
      auto& ri = rows[i];
      for (std::size_t c = col; c < C; ++c) ri[c] += f * pr[c];
      bound[i] += f * (p - 1);
      ri[col] = 0;
    }
    pivots.push_back(col);
    ++rk;
  }

  // Back-substitution on fully reduced rows.
  for (std::size_t r = 0; r < R; ++r)
    for (auto& x : rows[r]) x %= p;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t t = rows[i][col];
      if (t == 0) continue;
      const std::uint64_t f = p - t;
      for (std::size_t c = col; c < C; ++c)
        rows[i][c] = (rows[i][c] + f * rows[k][c]) % p;
    }
  }

  MatrixGF out(R, C, mod);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      out.set(r, c, static_cast<std::uint32_t>(rows[r][c]));
  return Echelon{std::move(out), std::move(pivots)};
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const MatrixGF& m) {
  const std::size_t C = m.cols();
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(C, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  const PrimeModulus& mod = m.modulus();
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(C, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      v[e.pivots[k]] = mod.neg(e.mat.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mrclab::ffla
