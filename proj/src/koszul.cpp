#include "mrclab/koszul.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "mrclab/parallel.hpp"

namespace mrclab::koszul {

using ffla::MatrixGF;
using ffla::PrimeModulus;
using pointsets::QuotientBasis;

namespace {

long long binom_ll(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (long long k = 0; k < std::min(b, a - b); ++k) r = r * (a - k) / (k + 1);
  return r;
}

}  // namespace

std::vector<std::vector<unsigned>> index_subsets(unsigned nvars, unsigned i) {
  std::vector<std::vector<unsigned>> out;
  if (i > nvars) return out;
  std::vector<unsigned> cur(i);
  for (unsigned k = 0; k < i; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    // colex successor: bump the smallest position that can move
    unsigned k = 0;
    while (k < i) {
      unsigned cap = (k + 1 < i) ? cur[k + 1] : nvars;
      if (cur[k] + 1 < cap) break;
      ++k;
    }
    if (k == i) break;
    ++cur[k];
    for (unsigned t = 0; t < k; ++t) cur[t] = t;
  }
  return out;
}

ValueModule ValueModule::ring(std::shared_ptr<const pointsets::QuotientTower> tower) {
  return ValueModule(std::move(tower));
}

ValueModule ValueModule::ideal(std::shared_ptr<const pointsets::QuotientTower> tower,
                               std::vector<std::size_t> vanish_indices) {
  ValueModule m(std::move(tower));
  m.is_ideal_ = true;
  m.vanish_ = std::move(vanish_indices);
  return m;
}

const QuotientBasis* ValueModule::piece(int j) const {
  if (j < 0) return nullptr;
  if (!is_ideal_) return &tower_->at(static_cast<unsigned>(j));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->pieces.find(j);
  if (it == cache_->pieces.end()) {
    it = cache_->pieces
             .emplace(j, std::make_unique<QuotientBasis>(pointsets::ideal_slice(
                             *tower_, static_cast<unsigned>(j), vanish_)))
             .first;
  }
  return it->second.get();
}

MatrixGF differential(const ValueModule& M, unsigned i, int j) {
  const PrimeModulus& mod = M.modulus();
  const QuotientBasis* dom = j >= 0 ? M.piece(j) : nullptr;
  const QuotientBasis* cod = M.piece(j + 1);
  const auto subs = index_subsets(M.nvars(), i);
  const auto subs_out = i >= 1 ? index_subsets(M.nvars(), i - 1)
                               : std::vector<std::vector<unsigned>>{};
  const std::size_t dim_dom = dom ? dom->dim() : 0;
  const std::size_t dim_cod = cod ? cod->dim() : 0;
  const std::size_t rows = subs.size() * dim_dom;
  const std::size_t cols = subs_out.size() * dim_cod;
  MatrixGF D(rows, cols, mod);
  if (rows == 0 || cols == 0) return D;

  std::map<std::vector<unsigned>, std::size_t> out_index;
  for (std::size_t a = 0; a < subs_out.size(); ++a) out_index[subs_out[a]] = a;

  // coords[s][b] = coordinates of X_s * w_b inside the degree j+1 basis
  std::vector<std::vector<std::vector<std::uint32_t>>> coords(M.nvars());
  for (unsigned s = 0; s < M.nvars(); ++s) {
    coords[s].resize(dim_dom);
    for (std::size_t b = 0; b < dim_dom; ++b)
      coords[s][b] = cod->coordinates(M.multiply(s, dom->basis.row(b)));
  }

  for (std::size_t a = 0; a < subs.size(); ++a) {
    const auto& S = subs[a];
    for (unsigned k = 0; k < i; ++k) {
      std::vector<unsigned> T;
      T.reserve(i - 1);
      for (unsigned t = 0; t < i; ++t)
        if (t != k) T.push_back(S[t]);
      const std::size_t a2 = out_index.at(T);
      const bool negative = k % 2 == 1;
      const unsigned s = S[k];
      for (std::size_t b = 0; b < dim_dom; ++b) {
        const std::size_t row = a * dim_dom + b;
        const auto& c = coords[s][b];
        for (std::size_t b2 = 0; b2 < dim_cod; ++b2) {
          if (c[b2] == 0) continue;
          const std::size_t col = a2 * dim_cod + b2;
          const std::uint32_t v = negative ? mod.neg(c[b2]) : c[b2];
          D.set(row, col, mod.add(D.at(row, col), v));
        }
      }
    }
  }
  return D;
}

long long KoszulCalculator::piece_dim(int j) const {
  const QuotientBasis* q = M_.piece(j);
  return q ? static_cast<long long>(q->dim()) : 0;
}

std::size_t KoszulCalculator::rank_d(unsigned i, int j) {
  if (i == 0 || i > M_.nvars() || j < 0) return 0;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({i, j});
    if (it != cache_.end()) return it->second;
  }
  const std::size_t r = ffla::rank(differential(M_, i, j));
  std::lock_guard<std::mutex> lock(mu_);
  cache_[{i, j}] = r;
  return r;
}

long long KoszulCalculator::betti(unsigned i, int j) {
  const long long dim = binom_ll(M_.nvars(), i) * piece_dim(j);
  if (dim == 0) return 0;
  return dim - static_cast<long long>(rank_d(i, j)) -
         static_cast<long long>(rank_d(i + 1, j - 1));
}

std::string BettiDiagram::text() const {
  std::ostringstream os;
  os << std::setw(4) << "i:";
  for (unsigned i = 0; i <= n + 1; ++i) os << std::setw(6) << i;
  os << "\n";
  for (std::size_t j = 0; j < rows.size(); ++j) {
    os << std::setw(3) << j << ":";
    for (long long v : rows[j])
      os << std::setw(6) << (v == 0 ? std::string("--") : std::to_string(v));
    os << "\n";
  }
  return os.str();
}

std::string BettiDiagram::json_rows() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < rows.size(); ++j) {
    os << (j ? "," : "") << "[";
    for (std::size_t i = 0; i < rows[j].size(); ++i)
      os << (i ? "," : "") << rows[j][i];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string BettiDiagram::csv() const {
  std::ostringstream os;
  os << "j";
  for (unsigned i = 0; i <= n + 1; ++i) os << ",b" << i;
  os << "\n";
  for (std::size_t j = 0; j < rows.size(); ++j) {
    os << j;
    for (long long v : rows[j]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

BettiDiagram BettiDiagram::entrywise_min(const std::vector<BettiDiagram>& diagrams) {
  if (diagrams.empty()) throw Error("ShapeMismatch", "min of no diagrams");
  BettiDiagram out = diagrams[0];
  for (std::size_t d = 1; d < diagrams.size(); ++d) {
    if (diagrams[d].rows.size() != out.rows.size() || diagrams[d].n != out.n)
      throw Error("ShapeMismatch", "min of incompatible diagrams");
    for (std::size_t j = 0; j < out.rows.size(); ++j)
      for (std::size_t i = 0; i < out.rows[j].size(); ++i)
        out.rows[j][i] = std::min(out.rows[j][i], diagrams[d].rows[j][i]);
  }
  return out;
}

long long betti_number(const curves::EmbeddedPointSet& pts, unsigned i, int j,
                       ffla::PrimeModulus mod) {
  auto tower = std::make_shared<pointsets::QuotientTower>(pts, mod);
  auto M = ValueModule::ring(std::move(tower));
  KoszulCalculator calc(M);
  return calc.betti(i, j);
}

BettiDiagram betti_diagram(const curves::EmbeddedPointSet& pts, unsigned J,
                           PrimeModulus mod) {
  auto tower = std::make_shared<pointsets::QuotientTower>(pts, mod);
  ValueModule M = ValueModule::ring(tower);
  for (unsigned j = 0; j <= J + 1; ++j) M.piece(j);  // warm the cache serially
  KoszulCalculator calc(M);

  const unsigned n = pts.n;
  std::vector<std::pair<unsigned, int>> jobs;
  for (unsigned i = 1; i <= n + 1; ++i)
    for (unsigned j = 0; j <= J; ++j) jobs.push_back({i, (int)j});
  parallel_for(jobs.size(), [&](std::size_t k) { calc.rank_d(jobs[k].first, jobs[k].second); });

  BettiDiagram out;
  out.n = n;
  out.source = pts.provenance.curve_id;
  out.rows.assign(J + 1, std::vector<long long>(n + 2, 0));
  for (unsigned j = 0; j <= J; ++j)
    for (unsigned i = 0; i <= n + 1; ++i) out.rows[j][i] = calc.betti(i, (int)j);
  return out;
}

BettiDiagram curve_betti_diagram(const curves::RealizedCurve& curve, unsigned J) {
  if (J + 1 > curve.jmax)
    throw Error("DegreeGuardViolated",
                "row bound " + std::to_string(J) + " needs graded pieces beyond jmax=" +
                    std::to_string(curve.jmax));
  BettiDiagram d = betti_diagram(curve.points, J, ffla::PrimeModulus(curve.prime));
  d.source = curve.model.id;
  return d;
}

}  // namespace mrclab::koszul
