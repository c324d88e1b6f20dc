#include "mrclab/polyring.hpp"

#include <algorithm>

namespace mrclab::polyring {

namespace {

void enumerate(unsigned vars_left, unsigned deg_left, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (vars_left == 1) {
    cur.push_back(deg_left);
    out.push_back(Monomial{cur});
    cur.pop_back();
    return;
  }
  for (unsigned e = deg_left + 1; e-- > 0;) {
    cur.push_back(e);
    enumerate(vars_left - 1, deg_left - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(unsigned n, unsigned t) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur;
  enumerate(n + 1, t, cur, out);
  return out;
}

void HomogeneousForm::add_term(const std::vector<unsigned>& exps, std::uint32_t c) {
  if (exps.size() != n_ + 1)
    throw Error("ShapeMismatch", "term has wrong variable count");
  Monomial m{exps};
  if (m.degree() != degree_)
    throw Error("ShapeMismatch", "term degree does not match form degree");
  std::uint32_t v = mod_.add(terms_.count(m) ? terms_[m] : 0, c % mod_.value());
  if (v == 0)
    terms_.erase(m);
  else
    terms_[m] = v;
}

std::uint32_t HomogeneousForm::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != n_ + 1)
    throw Error("ShapeMismatch", "point has wrong coordinate count");
  // powers[k][e] = point[k]^e
  std::vector<std::vector<std::uint32_t>> powers(n_ + 1);
  for (unsigned k = 0; k <= n_; ++k) {
    powers[k].resize(degree_ + 1);
    powers[k][0] = 1;
    for (unsigned e = 1; e <= degree_; ++e)
      powers[k][e] = mod_.mul(powers[k][e - 1], point[k]);
  }
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t v = c;
    for (unsigned k = 0; k <= n_; ++k) v = mod_.mul(v, powers[k][m.exps[k]]);
    acc = mod_.add(acc, v);
  }
  return acc;
}

std::vector<HomogeneousForm> HomogeneousForm::partials() const {
  if (degree_ == 0) throw Error("ShapeMismatch", "partials of a constant form");
  std::vector<HomogeneousForm> out;
  for (unsigned k = 0; k <= n_; ++k) {
    HomogeneousForm d(n_, degree_ - 1, mod_);
    for (const auto& [m, c] : terms_) {
      if (m.exps[k] == 0) continue;
      std::vector<unsigned> e = m.exps;
      std::uint32_t coef = mod_.mul(c, mod_.reduce(e[k]));
      e[k] -= 1;
      if (coef != 0) d.add_term(e, coef);
    }
    out.push_back(std::move(d));
  }
  return out;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& g) const {
  if (n_ != g.n_ || mod_ != g.mod_)
    throw Error("ShapeMismatch", "product of incompatible forms");
  HomogeneousForm h(n_, degree_ + g.degree_, mod_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : g.terms_) {
      std::vector<unsigned> e(n_ + 1);
      for (unsigned k = 0; k <= n_; ++k) e[k] = ma.exps[k] + mb.exps[k];
      h.add_term(e, mod_.mul(ca, cb));
    }
  }
  return h;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& g) const {
  if (n_ != g.n_ || degree_ != g.degree_ || mod_ != g.mod_)
    throw Error("ShapeMismatch", "sum of incompatible forms");
  HomogeneousForm h = *this;
  for (const auto& [m, c] : g.terms_) h.add_term(m.exps, c);
  return h;
}

std::vector<std::uint32_t> HomogeneousForm::coefficient_vector() const {
  std::vector<Monomial> basis = monomial_basis(n_, degree_);
  std::vector<std::uint32_t> v(basis.size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto it = terms_.find(basis[k]);
    if (it != terms_.end()) v[k] = it->second;
  }
  return v;
}

}  // namespace mrclab::polyring
