#include "mrclab/class_calculus.hpp"

#include <map>
#include <string>

#include "mrclab/rng.hpp"

namespace mrclab::classes {

namespace {

Int binom_int(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long long k = 0; k < b; ++k) {
    r *= a - k;
    r /= k + 1;
  }
  return r;
}

Int factorial(long long n) {
  Int r = 1;
  for (long long k = 2; k <= n; ++k) r *= k;
  return r;
}

// raw formula value, no domain fencing; degenerate pencil counts vanish
Rat b_raw(long long d, long long g) {
  const long long t = 2 * d - g;
  return Rat(Int(t - 1) * t * (t + 1) * binom_int(g, d));
}

Rat cj_value(long long g, long long j) { return b_raw(g - j, g) / Rat(2 * g - 2); }

Rat b1j_closed(long long g, long long j, long long i) {
  if (j == i) return 0;
  return Rat(g - 2 * j - 1) * Rat(binom_int(g - 1, j)) / Rat(g - 1);
}

// the one printed closed form, read with denominator 2 * j! * (g-1)!
Rat b2j_printed(long long g, long long j) {
  const Int num = Int(g - 2 * j - 1) *
                  (Int(g) * g * g - Int(g) * g - 4 * Int(g) * g * j +
                   4 * Int(j) * j * g + 2 * Int(j) * g - 2 * Int(j)) *
                  factorial(g - 2);
  const Int den = 2 * factorial(j) * factorial(g - 1);
  return Rat(num) / Rat(den);
}

Rat b2i_closed(long long g, long long i) {
  const Int t = g - 2 * i;
  return Rat((t * t * t - t) * binom_int(g, i)) / Rat(2 * g - 2);
}

Rat aj_closed(long long g, long long j) {
  return -Rat(g - 2 * j) * Rat(binom_int(g, j)) / Rat(g) +
         Rat(10 * (g - 2 * j)) * Rat(binom_int(g - 2, j - 1)) / Rat(g - 2);
}

}  // namespace

Rat binom(long long a, long long b) {
  if (a < 0) throw Error("DomainViolation", "binomial needs a >= 0");
  return Rat(binom_int(a, b));
}

Rat b_count(long long d, long long g) {
  if (2 * d < g + 2 || d > g)
    throw Error("DomainViolation", "b(d,g) needs (g+2)/2 <= d <= g");
  return b_raw(d, g);
}

Rat c_count(long long d, long long g, long long gamma) {
  if (gamma < 1 || 2 * d - g - gamma < 1)
    throw Error("DomainViolation", "c(d,g,gamma) needs gamma >= 1, 2d-g-gamma >= 1");
  return Rat(Int(gamma) * gamma * (2 * d - g) - gamma) * Rat(binom_int(g, d));
}

Rat b2j_from_relations(long long g, long long j) {
  if (j < 0 || 2 * j > g - 3)
    throw Error("DomainViolation", "relations need 0 <= j <= (g-3)/2");
  const Rat b1 = Rat(g - 2 * j - 1) * Rat(binom_int(g - 1, j)) / Rat(g - 1);
  const Rat c = cj_value(g, j);
  const Rat from1 = c_count(g - j, g, 1) + c - Rat(2 * g - 1) * b1;
  const Rat from2 = (c_count(g - j, g, g - 2 * j - 1) + c - b1) / Rat(2 * g - 1);
  if (from1 != from2)
    throw Error("InconsistentSystem",
                "the two test-curve relations give different b_{2j}");
  return from1;
}

CoefficientTable coefficient_table(long long g, long long i) {
  if (g < 4 || i < 1 || 2 * i > g - 1)
    throw Error("DomainViolation", "need g >= 4 and 1 <= i <= (g-1)/2");
  CoefficientTable t;
  t.g = g;
  t.i = i;
  for (long long j = 0; j <= i; ++j) {
    t.a.push_back(aj_closed(g, j));
    t.b1.push_back(b1j_closed(g, j, i));
    t.c.push_back(cj_value(g, j));
    if (j < i) {
      t.b2.push_back(b2j_from_relations(g, j));
      t.b2_closed.push_back(b2j_printed(g, j));
    } else {
      t.b2.push_back(b2i_closed(g, i));
      t.b2_closed.push_back(b2i_closed(g, i));
    }
    t.b2_discrepancy.push_back(t.b2.back() != t.b2_closed.back());
  }
  const auto thm = theorem41_coefficients(g, i);
  t.A = thm.A;
  t.B1 = thm.B1;
  t.B2 = thm.B2;
  return t;
}

ThmCoefficients theorem41_coefficients(long long g, long long i) {
  if (g < 4 || i < 1 || 2 * i > g - 1)
    throw Error("DomainViolation", "need g >= 4 and 1 <= i <= (g-1)/2");
  Rat A = 0, B2 = 0;
  for (long long j = 0; j <= i; ++j) {
    A += aj_closed(g, j);
    B2 += b1j_closed(g, j, i);
  }
  if (A != -binom(g - 1, i) + Rat(10) * binom(g - 3, i - 1))
    throw Error("IdentityViolation", "sum of a_j misses its closed form");
  if (B2 != binom(g - 2, i - 1))
    throw Error("IdentityViolation", "sum of b_{1j} misses its closed form");
  return {A, binom(g - 2, i), B2};
}

namespace {

ClassVector assemble_difference_class(long long g, long long i, long long n) {
  const Rat B = binom(g - 2, i - 1);   // C(g-2, i-1)
  const Rat G = binom(g - 1, i);       // C(g-1, i)
  const Rat C3 = binom(g - 3, i - 1);  // C(g-3, i-1)
  const Rat half(1, 2);

  // pushforward of c_1(E(Y))^2 / 2
  ClassVector T1{Rat(8 - 2 * g) * B * B - Rat(n - 2 * i - 2) * B * G,
                 B * G - half * G * G, -B * G - half * G * G, B * G - half * G * G};
  // pushforward of -1/2 f*c_1(omega) c_1(E(Y))
  ClassVector T2{Rat(g - 7) * B, -half * G, half * G, -half * G};
  // pushforward of 1/12 C(g-1,i) f*c_1(omega)^2
  ClassVector T3{G, 0, 0, 0};
  // pushforward of c_2(E(Y))
  ClassVector T4{Rat(8 - 2 * g) * B * (B - 1) + Rat(14 - 2 * g) * C3 -
                     Rat(n - 2 * i - 2) * B * (G - 1),
                 B * (G - 1) - half * G * (G - 1), -B * (G - 1) - half * G * (G - 1),
                 B * (G - 1) - half * G * (G - 1)};

  const ClassVector c1F = T1 - T4 + T2 + T3;
  const ClassVector c1Fp{-Rat(n - g - 1) * B, 0, 0, -binom(g - 2, i)};
  return c1Fp - c1F;
}

}  // namespace

ClassVector grr_class_check(long long g, long long i, long long n) {
  if (g < 4 || i < 1 || 2 * i > g - 1 || n < g + 2)
    throw Error("DomainViolation", "need g >= 4, 1 <= i <= (g-1)/2, n >= g+2");
  const ClassVector Z = assemble_difference_class(g, i, n);
  const ClassVector expected{-(binom(g - 1, i) - Rat(10) * binom(g - 3, i - 1)),
                             binom(g - 2, i), binom(g - 2, i - 1), 0};
  if (!(Z == expected))
    throw Error("IdentityViolation", "assembled class differs from its closed form");
  if (!(assemble_difference_class(g, i, n + 3) == Z))
    throw Error("NIndependenceViolation", "class depends on the number of markings");
  return Z;
}

bool chern_wedge_identity(unsigned n_R, unsigned i, ChernWhich which) {
  if (n_R < 2 || n_R > 8 || i < 1 || i > n_R)
    throw Error("DomainViolation", "need 2 <= rank <= 8 and 1 <= i <= rank");

  // all i-subsets of {0..n_R-1}
  std::vector<std::vector<unsigned>> subs;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (cur.size() == i) {
      subs.push_back(cur);
      return;
    }
    for (unsigned k = start; k < n_R; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  const Int M = binom_int(n_R - 1, i - 1);

  // quadratic forms in the roots as symmetric coefficient matrices
  using Quad = std::map<std::pair<unsigned, unsigned>, Int>;
  auto add = [](Quad& q, unsigned a, unsigned b, const Int& v) {
    if (a > b) std::swap(a, b);
    q[{a, b}] += v;
  };
  Quad lhs, rhs;
  bool linear = which == ChernWhich::c1;

  if (linear) {
    // compare c_1 coefficients instead: both sides linear in the roots
    std::vector<Int> l(n_R, 0), r(n_R, 0);
    for (const auto& S : subs)
      for (unsigned k : S) l[k] += 1;
    for (unsigned k = 0; k < n_R; ++k) r[k] = M;
    if (l != r) return false;
  } else {
    // c_2 of the wedge: sum over unordered pairs of distinct subset sums
    for (std::size_t s = 0; s < subs.size(); ++s)
      for (std::size_t t = s + 1; t < subs.size(); ++t)
        for (unsigned a : subs[s])
          for (unsigned b : subs[t]) add(lhs, a, b, 1);
    // 1/2 M(M-1) e1^2 + C(n-2,i-1) e2
    const Int e1sq = M * (M - 1) / 2;
    const Int e2c = binom_int(n_R - 2, i - 1);
    for (unsigned a = 0; a < n_R; ++a)
      for (unsigned b = a; b < n_R; ++b)
        add(rhs, a, b, a == b ? e1sq : 2 * e1sq + e2c);
    auto trim = [](Quad& q) {
      for (auto it = q.begin(); it != q.end();)
        it = it->second == 0 ? q.erase(it) : std::next(it);
    };
    trim(lhs);
    trim(rhs);
    if (n_R <= 5 && lhs != rhs) return false;

    // randomized evaluation modulo a Mersenne prime, every rank
    const unsigned __int128 q = (unsigned __int128)((std::uint64_t(1) << 61) - 1);
    SplitMix64 rng(0x5eedc0deULL ^ (n_R * 131 + i));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> x(n_R);
      for (auto& v : x) v = rng.next() % (std::uint64_t)q;
      auto eval = [&](const Quad& f) {
        unsigned __int128 acc = 0;
        for (const auto& [ab, c] : f) {
          const Int cm = ((c % Int(std::uint64_t(q))) + Int(std::uint64_t(q))) %
                         Int(std::uint64_t(q));
          unsigned __int128 term = static_cast<std::uint64_t>(cm);
          term = term * x[ab.first] % q;
          term = term * x[ab.second] % q;
          acc = (acc + term) % q;
        }
        return static_cast<std::uint64_t>(acc);
      };
      if (eval(lhs) != eval(rhs)) return false;
    }
  }
  return true;
}

std::pair<Rat, long long> difference_class(long long a, long long b, long long g) {
  const bool symmetric_range = 1 <= b && b <= a && 2 * a <= g - 1;
  const bool canonical_case = 1 <= b && b <= a && a + b == g - 1;
  if (!symmetric_range && !canonical_case)
    throw Error("DomainViolation", "difference variety indices out of range");
  Rat coeff = binom(a + b, a);
  const long long power = g - a - b;
  if (canonical_case) {
    const long long i = b;
    if (coeff != binom(g - 1, i) || power != 1)
      throw Error("IdentityViolation", "canonical difference-class specialization");
  }
  return {coeff, power};
}

bool mrc_failure_gate(long long g, long long d) {
  if (d <= g) throw Error("DomainViolation", "gate needs d > g");
  const long long i0 = (g + 1) / 2;
  // 2g-2 >= g-1 + d*i0/(d-g), cleared of denominators
  return Rat(g - 1) >= Rat(d * i0) / Rat(d - g);
}

}  // namespace mrclab::classes
