#include "ffgenus/factor.hpp"

#include <algorithm>
#include <bit>

namespace ffg {

Poly Factorization::expand(const FieldPtr& field) const {
  Poly acc = Poly::constant(field, unit);
  for (const auto& [f, e] : factors) acc *= pow(f, static_cast<u64>(e));
  return acc;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly pth_root(const Poly& a) {
  const auto& F = a.F();
  const u64 p = F.characteristic();
  // a^(1/p) = a^(q/p) on coefficients.
  const u64 root_exp = F.size() / p;
  std::vector<u64> out(a.is_zero() ? 0 : a.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const u64 c = a.coeffs()[i];
    if (!c) continue;
    if (i % p != 0) throw std::invalid_argument("pth_root: polynomial is not a p-th power");
    out[i / p] = F.pow(c, root_exp);
  }
  return Poly(a.field(), std::move(out));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a_in) {
  if (a_in.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly f = a_in.monic();
  if (f.degree() == 0) return out;
  const int p = static_cast<int>(std::min<u64>(f.F().characteristic(), 1u << 30));
  Poly c = gcd(f, f.derivative());
  Poly w = quo(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = quo(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = std::move(y);
    c = quo(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    Poly root = pth_root(c);
    for (auto& [g, j] : squarefree_decomposition(root)) out.emplace_back(std::move(g), j * p);
  }
  return out;
}

FrobeniusMap::FrobeniusMap(const Poly& modulus) : g_(modulus) {
  const u64 q = g_.F().size();
  const u64 d = static_cast<u64>(std::max(g_.degree(), 1));
  const u64 logq = static_cast<u64>(std::bit_width(q));
  // Matrix rows by shifting x^(q(j-1)) by q places and reducing: O(q d) each.
  // Worth it once many applications are expected and q is not huge.
  use_matrix_ = d >= 16 && q <= 4 * d * logq;
  if (!use_matrix_) return;
  const auto& F = g_.F();
  const auto& gc = g_.coeffs();
  rows_.assign(d, std::vector<u64>(d, 0));
  std::vector<u64> cur(d, 0);
  cur[0] = 1;
  rows_[0] = cur;
  for (u64 j = 1; j < d; ++j) {
    for (u64 step = 0; step < q; ++step) {
      // cur <- cur * x mod g
      const u64 top = cur[d - 1];
      for (u64 k = d - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top) {
        for (u64 k = 0; k < d; ++k)
          if (gc[k]) cur[k] = F.sub(cur[k], F.mul(top, gc[k]));
      }
    }
    rows_[j] = cur;
  }
}

Poly FrobeniusMap::apply(const Poly& h_in) const {
  if (!use_matrix_) return powmod(h_in, g_.F().size(), g_);
  const auto& F = g_.F();
  Poly h = rem(h_in, g_);
  const std::size_t d = rows_.size();
  std::vector<u64> out(d, 0);
  if (F.is_prime_field()) {
    const u64 p = F.characteristic();
    std::vector<u128> acc(d, 0);
    for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
      const u64 c = h.coeffs()[j];
      if (!c) continue;
      const auto& row = rows_[j];
      for (std::size_t k = 0; k < d; ++k) acc[k] += static_cast<u128>(c) * row[k];
    }
    for (std::size_t k = 0; k < d; ++k) out[k] = static_cast<u64>(acc[k] % p);
  } else {
    // Over F_q the coefficients are fixed by the q-power map as well.
    for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
      const u64 c = h.coeffs()[j];
      if (!c) continue;
      const auto& row = rows_[j];
      for (std::size_t k = 0; k < d; ++k)
        if (row[k]) out[k] = F.add(out[k], F.mul(c, row[k]));
    }
  }
  return Poly(g_.field(), std::move(out));
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& g_in) {
  std::vector<std::pair<Poly, int>> out;
  Poly g = g_in.monic();
  const auto& field = g.field();
  const Poly x = Poly::var(field);
  FrobeniusMap frob(g);
  int frob_degree = g.degree();
  Poly h = rem(x, g);
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = frob.apply(h);
    Poly part = gcd(h - x, g);
    if (part.degree() > 0) {
      out.emplace_back(part, d);
      g = quo(g, part);
      h = rem(h, g);
      if (g.degree() > 0 && 2 * g.degree() < frob_degree) {
        frob = FrobeniusMap(g);
        frob_degree = g.degree();
      }
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

namespace {

Poly random_poly(const FieldPtr& field, int deg_below, std::mt19937_64& rng) {
  std::vector<u64> c(static_cast<std::size_t>(deg_below));
  for (auto& v : c) v = field->random(rng);
  return Poly(field, std::move(c));
}

// A polynomial whose gcd with g splits off a proper factor with probability about 1/2.
Poly splitting_candidate(const Poly& g, int d, const FrobeniusMap& frob, std::mt19937_64& rng) {
  const auto& F = g.F();
  const auto& field = g.field();
  Poly a = random_poly(field, g.degree(), rng);
  if (F.characteristic() == 2) {
    // Absolute trace to F_2 over F_{q^d}: sum of a^(2^j), j < m d.
    const int steps = F.degree() * d;
    Poly term = a, acc = a;
    for (int j = 1; j < steps; ++j) {
      term = mulmod(term, term, g);
      acc += term;
    }
    return acc;
  }
  // Norm-like product a^(1 + q + ... + q^(d-1)), then power (q-1)/2.
  Poly pw = a, prod = a;
  for (int j = 1; j < d; ++j) {
    pw = frob.apply(pw);
    prod = mulmod(prod, pw, g);
  }
  Poly b = powmod(prod, (F.size() - 1) / 2, g);
  return b - Poly::constant(field, 1);
}

void edf_recurse(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  FrobeniusMap frob(g);
  for (;;) {
    Poly cand = splitting_candidate(g, d, frob, rng);
    Poly part = gcd(cand, g);
    if (part.degree() > 0 && part.degree() < g.degree()) {
      edf_recurse(part, d, rng, out);
      edf_recurse(quo(g, part), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> equal_degree_factorization(const Poly& g, int d, std::mt19937_64& rng) {
  std::vector<Poly> out;
  if (g.degree() <= 0) return out;
  if (g.degree() % d != 0) throw std::invalid_argument("equal-degree split: degree mismatch");
  edf_recurse(g.monic(), d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<u64> roots(const Poly& a, std::mt19937_64& rng) {
  if (a.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  std::vector<u64> out;
  if (a.degree() < 1) return out;
  Poly g = a.monic();
  const auto& field = g.field();
  if (g[0] == 0) {
    out.push_back(0);
    while (g[0] == 0) g = quo(g, Poly::var(field));
  }
  if (g.degree() >= 1) {
    const Poly x = Poly::var(field);
    Poly lin = gcd(powmod(x, field->size(), g) - x, g);
    for (const auto& r : equal_degree_factorization(lin, 1, rng)) out.push_back(field->neg(r[0]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const Poly& a) {
  if (a.degree() < 1) throw std::invalid_argument("irreducibility of a constant");
  if (a.degree() == 1) return true;
  Poly g = a.monic();
  Poly der = g.derivative();
  if (der.is_zero() || gcd(g, der).degree() > 0) return false;
  const Poly x = Poly::var(g.field());
  FrobeniusMap frob(g);
  Poly h = rem(x, g);
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = frob.apply(h);
    if (gcd(h - x, g).degree() > 0) return false;
  }
  return true;
}

Factorization factorize(const Poly& a, std::mt19937_64& rng) {
  if (a.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
  Factorization result;
  result.unit = a.lc();
  for (const auto& [sqf, mult] : squarefree_decomposition(a)) {
    for (const auto& [block, d] : distinct_degree_factorization(sqf)) {
      for (auto& fac : equal_degree_factorization(block, d, rng)) result.factors.emplace_back(std::move(fac), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& l, const auto& r) { return canonical_less(l.first, r.first); });
  if (result.expand(a.field()) != a) throw std::logic_error("factorization does not multiply back to its input");
  return result;
}

Factorization factorize(const Poly& a, u64 seed) {
  std::mt19937_64 rng(seed);
  return factorize(a, rng);
}

}  // namespace ffg
