#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mrclab/ffla.hpp"

namespace mrclab::polyring {

/// Exponent vector for n+1 variables X_0..X_n.
struct Monomial {
  std::vector<unsigned> exps;

  unsigned degree() const {
    unsigned s = 0;
    for (unsigned e : exps) s += e;
    return s;
  }
  bool operator==(const Monomial&) const = default;
  // graded-lex: higher degree first, then lexicographically larger exponent
  // vector first (so X_0^t leads its degree block)
  bool operator<(const Monomial& o) const {
    unsigned da = degree(), db = o.degree();
    if (da != db) return da > db;
    return exps > o.exps;
  }
};

/// All degree-t monomials in X_0..X_n, graded-lex order, C(n+t,n) of them.
std::vector<Monomial> monomial_basis(unsigned n, unsigned t);

/// Homogeneous element of GF(p)[X_0..X_n]_t. Zero coefficients never stored.
class HomogeneousForm {
 public:
  HomogeneousForm(unsigned n, unsigned degree, ffla::PrimeModulus mod)
      : n_(n), degree_(degree), mod_(mod) {}

  unsigned ambient_dim() const { return n_; }
  unsigned degree() const { return degree_; }
  const ffla::PrimeModulus& modulus() const { return mod_; }
  const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * X^exps; throws ShapeMismatch on wrong length or degree.
  void add_term(const std::vector<unsigned>& exps, std::uint32_t c);

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  /// Formal partial derivatives with respect to X_0..X_n.
  std::vector<HomogeneousForm> partials() const;

  HomogeneousForm operator*(const HomogeneousForm& g) const;
  HomogeneousForm operator+(const HomogeneousForm& g) const;

  /// Coefficients against monomial_basis(n, degree), dense.
  std::vector<std::uint32_t> coefficient_vector() const;

  bool operator==(const HomogeneousForm& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && mod_ == o.mod_ && terms_ == o.terms_;
  }

 private:
  unsigned n_, degree_;
  ffla::PrimeModulus mod_;
  std::map<Monomial, std::uint32_t> terms_;
};

}  // namespace mrclab::polyring
