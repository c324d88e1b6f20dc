#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrclab {

/// Library-wide error with a machine-readable kind tag
/// (e.g. "NonInjectiveParametrization", "DegreeGuardViolated").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

namespace ffla {

/// An odd word-sized prime 2 < p < 2^31, checked at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // a,b < p < 2^31, no overflow
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0

  /// Canonical residue of a signed integer.
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over GF(p). Entries always canonical residues.
class MatrixGF {
 public:
  MatrixGF(std::size_t rows, std::size_t cols, PrimeModulus mod)
      : rows_(rows), cols_(cols), mod_(mod), a_(rows * cols, 0) {}

  static MatrixGF identity(std::size_t n, PrimeModulus mod);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return mod_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) {
    return {a_.data() + r * cols_, cols_};
  }

  MatrixGF transpose() const;

  /// y = M v, exact.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

  /// Rows of `other` appended below.
  MatrixGF stacked(const MatrixGF& other) const;

  bool operator==(const MatrixGF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  PrimeModulus mod_;
  std::vector<std::uint32_t> a_;
};

/// Row-space dimension. Deterministic elimination, delayed reduction.
std::size_t rank(const MatrixGF& m);

struct Echelon {
  MatrixGF mat;                      // reduced row echelon form, zero rows kept
  std::vector<std::size_t> pivots;   // strictly increasing pivot columns
  std::size_t rank() const { return pivots.size(); }
};

Echelon reduced_echelon(const MatrixGF& m);

/// Basis of the right kernel; size = cols - rank(m); M v = 0 exactly.
std::vector<std::vector<std::uint32_t>> kernel_basis(const MatrixGF& m);

}  // namespace ffla
}  // namespace mrclab
