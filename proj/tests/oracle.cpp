#include "oracle.hpp"

#include <map>
#include <stdexcept>

#include "mrclab/polyring.hpp"

namespace oracle {

namespace {

using mrclab::curves::EmbeddedPointSet;
using mrclab::polyring::Monomial;

std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

std::uint32_t powp(std::uint32_t a, unsigned e, std::uint32_t p) {
  std::uint32_t r = 1, b = a % p;
  for (; e; e >>= 1, b = mulp(b, b, p))
    if (e & 1) r = mulp(r, b, p);
  return r;
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
  return powp(a % p, p - 2, p);  // Fermat, p prime
}

struct Rref {
  std::vector<std::vector<std::uint32_t>> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;               // pivot column per row
  std::vector<std::size_t> pivot_sources;        // original row index per pivot
};

Rref rref(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  Rref out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t lead_row = 0;
  std::vector<std::size_t> source(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) source[r] = r;
  for (std::size_t col = 0; col < cols && lead_row < m.size(); ++col) {
    std::size_t pr = lead_row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[lead_row]);
    std::swap(source[pr], source[lead_row]);
    const std::uint32_t inv = invp(m[lead_row][col], p);
    for (auto& v : m[lead_row]) v = mulp(v, inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead_row || m[r][col] == 0) continue;
      const std::uint32_t f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        m[r][c] = (m[r][c] + std::uint64_t(p - f) * m[lead_row][c]) % p;
    }
    out.pivots.push_back(col);
    out.pivot_sources.push_back(source[lead_row]);
    ++lead_row;
  }
  m.resize(lead_row);
  out.rows = std::move(m);
  return out;
}

// one graded piece of the quotient ring, in monomial coordinates
struct Piece {
  std::vector<Monomial> monomials;            // full degree-j basis of S
  std::map<Monomial, std::size_t> index;      // monomial -> position
  std::vector<std::size_t> complement;        // monomials spanning S_j / I_j
  // red[m] = coordinates of monomial m over the complement
  std::vector<std::vector<std::uint32_t>> red;
};

Piece build_piece(const EmbeddedPointSet& pts, unsigned j, std::uint32_t p) {
  Piece out;
  out.monomials = mrclab::polyring::monomial_basis(pts.n, j);
  for (std::size_t k = 0; k < out.monomials.size(); ++k)
    out.index[out.monomials[k]] = k;

  // evaluation rows, one per monomial
  std::vector<std::vector<std::uint32_t>> E(
      out.monomials.size(), std::vector<std::uint32_t>(pts.points.size(), 0));
  for (std::size_t k = 0; k < out.monomials.size(); ++k)
    for (std::size_t q = 0; q < pts.points.size(); ++q) {
      std::uint32_t v = 1;
      for (unsigned s = 0; s <= pts.n; ++s)
        v = mulp(v, powp(pts.points[q][s], out.monomials[k].exps[s], p), p);
      E[k][q] = v;
    }

  const Rref R = rref(E, p);
  out.complement = R.pivot_sources;  // first independent monomials, in order

  // coordinates of every monomial over the complement: reduce its value row
  // against the rref and read the pivot-column coefficients, then convert
  // back through the (unit upper triangular over the complement) system.
  // Simpler: the complement rows themselves echelonize with identity bookkeeping.
  const std::size_t c = out.complement.size();
  std::vector<std::vector<std::uint32_t>> aug(
      c, std::vector<std::uint32_t>(pts.points.size() + c, 0));
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t q = 0; q < pts.points.size(); ++q)
      aug[k][q] = E[out.complement[k]][q];
    aug[k][pts.points.size() + k] = 1;  // transform tracker
  }
  const Rref A = rref(aug, p);
  if (A.rows.size() != c) throw std::logic_error("complement rows not independent");

  out.red.assign(out.monomials.size(), std::vector<std::uint32_t>(c, 0));
  for (std::size_t k = 0; k < out.monomials.size(); ++k) {
    // reduce E[k] by the echelon rows; the used multiples, pushed through the
    // tracker block, are the coordinates over the complement
    std::vector<std::uint32_t> v = E[k];
    std::vector<std::uint32_t> coords(c, 0);
    for (std::size_t rrow = 0; rrow < c; ++rrow) {
      const std::size_t col = A.pivots[rrow];
      if (col >= pts.points.size()) throw std::logic_error("pivot in tracker block");
      const std::uint32_t f = v[col];
      if (f == 0) continue;
      for (std::size_t q = 0; q < pts.points.size(); ++q)
        v[q] = (v[q] + std::uint64_t(p - f) * A.rows[rrow][q]) % p;
      for (std::size_t t = 0; t < c; ++t) {
        const std::uint32_t tv = A.rows[rrow][pts.points.size() + t];
        coords[t] = (coords[t] + std::uint64_t(f) * tv) % p;
      }
    }
    for (std::size_t q = 0; q < pts.points.size(); ++q)
      if (v[q] != 0) throw std::logic_error("monomial row outside complement span");
    out.red[k] = std::move(coords);
  }
  return out;
}

void all_subsets(unsigned nvars, unsigned i, std::vector<unsigned>& cur,
                 unsigned start, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == i) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = start; k < nvars; ++k) {
    cur.push_back(k);
    all_subsets(nvars, i, cur, k + 1, out);
    cur.pop_back();
  }
}

// matrix of delta: wedge^i V (x) N_j -> wedge^{i-1} V (x) N_{j+1}
std::vector<std::vector<std::uint32_t>> koszul_matrix(const EmbeddedPointSet& pts,
                                                      unsigned i, unsigned j,
                                                      const Piece& Pj,
                                                      const Piece& Pj1,
                                                      std::uint32_t p) {
  const unsigned nvars = pts.n + 1;
  std::vector<std::vector<unsigned>> dom_subs, cod_subs;
  std::vector<unsigned> cur;
  all_subsets(nvars, i, cur, 0, dom_subs);
  all_subsets(nvars, i - 1, cur, 0, cod_subs);
  std::map<std::vector<unsigned>, std::size_t> cod_index;
  for (std::size_t k = 0; k < cod_subs.size(); ++k) cod_index[cod_subs[k]] = k;

  const std::size_t cdom = Pj.complement.size(), ccod = Pj1.complement.size();
  std::vector<std::vector<std::uint32_t>> M(
      dom_subs.size() * cdom, std::vector<std::uint32_t>(cod_subs.size() * ccod, 0));
  for (std::size_t a = 0; a < dom_subs.size(); ++a) {
    for (std::size_t b = 0; b < cdom; ++b) {
      auto& row = M[a * cdom + b];
      const Monomial& m = Pj.monomials[Pj.complement[b]];
      for (std::size_t k = 0; k < dom_subs[a].size(); ++k) {
        const unsigned s = dom_subs[a][k];
        std::vector<unsigned> rest;
        for (unsigned t : dom_subs[a])
          if (t != s) rest.push_back(t);
        Monomial m2 = m;
        m2.exps[s] += 1;
        const std::size_t m2idx = Pj1.index.at(m2);
        const std::size_t coff = cod_index.at(rest) * ccod;
        const bool neg = k % 2 == 1;
        for (std::size_t t = 0; t < ccod; ++t) {
          std::uint32_t v = Pj1.red[m2idx][t];
          if (neg) v = v == 0 ? 0 : p - v;
          row[coff + t] = (row[coff + t] + v) % p;
        }
      }
    }
  }
  return M;
}

}  // namespace

long long pascal_binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row{1};
  for (long long r = 1; r <= n; ++r) {
    std::vector<long long> next(r + 1, 1);
    for (long long c = 1; c < r; ++c) next[c] = row[c - 1] + row[c];
    row = std::move(next);
  }
  return row[k];
}

std::size_t naive_rank(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  return rref(std::move(m), p).rows.size();
}

long long naive_betti(const mrclab::curves::EmbeddedPointSet& pts, unsigned i,
                      unsigned j, std::uint32_t p) {
  const unsigned nvars = pts.n + 1;
  if (i > nvars) return 0;
  const Piece Pj = build_piece(pts, j, p);
  const Piece Pj1 = build_piece(pts, j + 1, p);
  const long long dim =
      pascal_binom(nvars, i) * static_cast<long long>(Pj.complement.size());

  long long rank_out = 0;
  if (i >= 1)
    rank_out = static_cast<long long>(
        naive_rank(koszul_matrix(pts, i, j, Pj, Pj1, p), p));
  long long rank_in = 0;
  if (j >= 1 && i + 1 <= nvars) {
    const Piece Pjm = build_piece(pts, j - 1, p);
    rank_in = static_cast<long long>(
        naive_rank(koszul_matrix(pts, i + 1, j - 1, Pjm, Pj, p), p));
  }
  return dim - rank_out - rank_in;
}

}  // namespace oracle
