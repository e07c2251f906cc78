#include "ffgenus/montes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>


namespace ffg {

PrimeLocal PrimeLocal::make(const Poly& p, bool at_infinity) {
  if (p.degree() < 1 || p.lc() != 1) throw std::invalid_argument("prime must be monic of degree >= 1");
  const TowerPtr k = Tower::base(p.field());
  return PrimeLocal{p, TowerExt::make(k, tpoly::from_k(*k, p.coeffs())), at_infinity};
}

Elem PrimeLocal::reduce(const Poly& a) const {
  if (residue.trivial()) return {a.eval(residue.root[0])};
  Elem e = field().zero();
  const Poly r = rem(a, p);
  std::copy(r.coeffs().begin(), r.coeffs().end(), e.begin());
  return e;
}

Poly PrimeLocal::lift(const Elem& c) const {
  std::vector<u64> v;
  for (const auto& x : residue.coords(c)) v.push_back(x[0]);
  return Poly(p.field(), std::move(v));
}

i64 vp_poly(const Poly& a, const PrimeLocal& P) {
  if (a.is_zero()) return kInfinity;
  return valuation(a, P.p);
}

std::vector<BiPoly> phi_expansion(const BiPoly& F, const BiPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1) throw std::invalid_argument("phi must be monic of positive degree");
  std::vector<BiPoly> out;
  BiPoly rest = F;
  while (!rest.is_zero()) {
    auto [q, r] = divrem_monic(rest, phi);
    out.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

namespace {

using i128 = __int128;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_pos(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

NewtonPolygon principal_polygon(const std::vector<i64>& ordinates) {
  std::vector<std::pair<int, i64>> pts;
  for (std::size_t s = 0; s < ordinates.size(); ++s)
    if (ordinates[s] < kInfinity) pts.emplace_back(static_cast<int>(s), ordinates[s]);
  NewtonPolygon N;
  if (pts.empty()) return N;
  std::size_t last = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].second < pts[last].second) last = i;
  std::vector<std::pair<int, i64>> hull;
  for (std::size_t i = 0; i <= last; ++i) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const auto& c = pts[i];
      // drop b when it lies on or above segment a-c
      const i128 lhs = static_cast<i128>(b.second - a.second) * (c.first - a.first);
      const i128 rhs = static_cast<i128>(c.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pts[i]);
  }
  N.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Side S;
    S.s0 = hull[i].first;
    S.v0 = hull[i].second;
    S.s1 = hull[i + 1].first;
    S.v1 = hull[i + 1].second;
    const i64 dv = S.v0 - S.v1, ds = S.s1 - S.s0;
    const i64 g = std::gcd(dv, ds);
    S.h = dv / g;
    S.e = ds / g;
    N.sides.push_back(S);
  }
  return N;
}

i64 polygon_index(const NewtonPolygon& N) {
  if (N.sides.empty()) return 0;
  const i64 base = N.vertices.back().second;
  i64 total = 0;
  for (const auto& S : N.sides) {
    const i64 ds = S.s1 - S.s0;
    for (int s = S.s0 + (&S == &N.sides.front() ? 1 : 0); s < S.s1; ++s) {
      const i64 num = (S.v0 - base) * ds - static_cast<i64>(s - S.s0) * (S.v0 - S.v1);
      total += floor_div(num, ds);
    }
  }
  return total;
}

namespace {

std::string join_vertices(const NewtonPolygon& N) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N.vertices.size(); ++i)
    os << (i ? " " : "") << "(" << N.vertices[i].first << "," << N.vertices[i].second << ")";
  return os.str();
}

struct VR {
  i64 v = kInfinity;
  Elem res;
};

struct Level {
  BiPoly phi;
  i64 vphi = 0;
  TowerExt ext_in;  // F_{r-1} -> F_r, root z_{r-1}
  i64 h = 0, e = 1, ell = 0;
  int f = 0;
  i64 W() const { return e * vphi + h; }
};

class Engine {
 public:
  Engine(const DefiningPoly& f, const PrimeLocal& P, const MontesOptions& opts) : f_(f), P_(P), opts_(opts) {
    const i64 d = opts.delta_p.value_or(static_cast<i64>(f.n()) * 64);
    budget_ = 16 * (d + 2) * f.n() + 64;
  }

  MontesResult run() {
    const Tower& F0 = P_.field();
    TPoly fbar;
    for (const auto& a : f_.poly().coeffs()) fbar.push_back(P_.reduce(a));
    tpoly::trim(F0, fbar);
    for (const auto& [psi, mult] : tpoly::factorize(F0, fbar, opts_.seed)) {
      trace("order 0: psi " + tpoly::to_string(F0, psi) + " multiplicity " + std::to_string(mult));
      if (mult < 2) continue;
      start(psi);
      step(mult, tpoly::degree(psi));
    }
    result_.ind = ind_;
    return std::move(result_);
  }

  TPoly residual_order1(const TPoly& psi0, std::size_t side) {
    start(psi0);
    const auto exp = phi_expansion(f_.poly(), levels_[0].phi);
    std::vector<VR> vr;
    std::vector<i64> ord;
    for (const auto& a : exp) {
      vr.push_back(val_res(1, a));
      ord.push_back(vr.back().v);
    }
    const NewtonPolygon N = principal_polygon(ord);
    if (side >= N.sides.size()) throw std::out_of_range("no such side");
    return residual(N.sides[side], vr, 1);
  }

 private:
  void start(const TPoly& psi0) {
    std::vector<Poly> phic;
    for (const auto& a : psi0) phic.push_back(P_.lift(a));
    levels_.clear();
    levels_.push_back(Level{BiPoly(f_.field(), std::move(phic)), 0, TowerExt::make(P_.residue.target, psi0)});
  }

  void trace(const std::string& line) {
    if (!opts_.trace) return;
    std::string full = std::string(P_.at_infinity ? "[inf] " : "[" + P_.p.to_string() + "] ") + line;
    if (opts_.sink) opts_.sink(full);
    result_.trace.push_back(std::move(full));
  }

  const TowerPtr& field_at(int r) const { return levels_[static_cast<std::size_t>(r) - 1].ext_in.target; }

  Poly pow_p(i64 v) {
    while (static_cast<i64>(ppow_.size()) <= v)
      ppow_.push_back(ppow_.empty() ? Poly::constant(f_.field(), 1) : ppow_.back() * P_.p);
    return ppow_[static_cast<std::size_t>(v)];
  }

  // (v_r(a), rho_r(a)) with rho_r(a) in F_r.
  VR val_res(int r, const BiPoly& a) {
    if (a.is_zero()) return {};
    if (r == 1) {
      i64 v = kInfinity;
      for (const auto& c : a.coeffs())
        if (!c.is_zero()) v = std::min(v, vp_poly(c, P_));
      const BiPoly b = v ? a.divide_exact(pow_p(v)) : a;
      const TowerExt& ext = levels_[0].ext_in;
      const Tower& F1 = *ext.target;
      Elem acc = F1.zero();
      for (std::size_t i = b.coeffs().size(); i-- > 0;)
        acc = F1.add(F1.mul(acc, ext.root), ext.embed(P_.reduce(b.coeffs()[i])));
      return {v, acc};
    }
    const Level& L = levels_[static_cast<std::size_t>(r) - 2];
    const TowerExt& ext = levels_[static_cast<std::size_t>(r) - 1].ext_in;
    const Tower& Fr = *ext.target;
    const auto exp = phi_expansion(a, L.phi);
    std::vector<VR> child(exp.size());
    i64 V = kInfinity;
    for (std::size_t s = 0; s < exp.size(); ++s) {
      child[s] = val_res(r - 1, exp[s]);
      if (child[s].v < kInfinity) V = std::min(V, L.e * child[s].v + static_cast<i64>(s) * L.W());
    }
    Elem acc = Fr.zero();
    for (std::size_t s = 0; s < exp.size(); ++s) {
      if (child[s].v == kInfinity || L.e * child[s].v + static_cast<i64>(s) * L.W() != V) continue;
      const i64 num = static_cast<i64>(s) - L.ell * V;
      if (num % L.e) throw std::logic_error("residue exponent not integral");
      acc = Fr.add(acc, Fr.mul(ext.embed(child[s].res), Fr.pow_signed(ext.root, num / L.e)));
    }
    if (Fr.is_zero(acc)) throw std::logic_error("vanishing residue of a nonzero coefficient");
    return {V, acc};
  }

  // a with deg_x a < deg phi_r, v_r(a) = V and rho_r(a) = b.
  BiPoly lift(int r, const Elem& b, i64 V) {
    const FieldPtr& k = f_.field();
    if (r == 1) {
      if (V < 0) throw std::logic_error("negative lift value");
      std::vector<Poly> c;
      for (const auto& x : levels_[0].ext_in.coords(b)) c.push_back(P_.lift(x) * pow_p(V));
      return BiPoly(k, std::move(c));
    }
    const Level& L = levels_[static_cast<std::size_t>(r) - 2];
    const TowerExt& ext = levels_[static_cast<std::size_t>(r) - 1].ext_in;
    const Tower& Fr = *ext.target;
    const Tower& Fprev = *ext.base;
    const i64 sc = mod_pos(L.ell * V, L.e);
    const i64 kappa = (sc - L.ell * V) / L.e;
    const auto beta = ext.coords(Fr.mul(b, Fr.pow_signed(ext.root, -kappa)));
    BiPoly out(k);
    BiPoly phipow = pow(L.phi, static_cast<u64>(sc));
    const BiPoly phie = pow(L.phi, static_cast<u64>(L.e));
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (!Fprev.is_zero(beta[j])) {
        const i64 num = V - (sc + static_cast<i64>(j) * L.e) * L.W();
        if (num % L.e) throw std::logic_error("lift value not integral");
        out += lift(r - 1, beta[j], num / L.e) * phipow;
      }
      if (j + 1 < beta.size()) phipow *= phie;
    }
    return out;
  }

  TPoly residual(const Side& S, const std::vector<VR>& vr, int r) {
    const Tower& Fr = *field_at(r);
    TPoly c(static_cast<std::size_t>(S.degree()) + 1, Fr.zero());
    for (int j = 0; j <= S.degree(); ++j) {
      const int s = S.s0 + j * static_cast<int>(S.e);
      const i64 line = S.v0 - static_cast<i64>(j) * S.h;
      if (s < static_cast<int>(vr.size()) && vr[s].v < kInfinity) {
        const i64 ordinate = vr[s].v + static_cast<i64>(s) * levels_[static_cast<std::size_t>(r) - 1].vphi;
        if (ordinate == line) c[j] = vr[s].res;
      }
    }
    tpoly::trim(Fr, c);
    return c;
  }

  void step(int ell, i64 weight) {
    if (++nodes_ > budget_) throw std::runtime_error("montes: node budget exceeded");
    const int r = static_cast<int>(levels_.size());
    const Level& Lr = levels_.back();
    std::vector<VR> vr;
    std::vector<i64> ord;
    BiPoly rest = f_.poly();
    for (int s = 0; s <= ell; ++s) {
      auto [q, a] = divrem_monic(rest, Lr.phi);
      vr.push_back(val_res(r, a));
      ord.push_back(vr.back().v == kInfinity ? kInfinity : vr.back().v + static_cast<i64>(s) * Lr.vphi);
      rest = std::move(q);
    }
    if (ord[0] == kInfinity) throw std::invalid_argument("f is reducible: a key polynomial divides f");
    for (int s = 0; s < ell; ++s)
      if (ord[s] <= ord[ell]) throw std::logic_error("principal polygon length does not match the residual multiplicity");
    const NewtonPolygon N = principal_polygon(ord);
    const i64 idx = polygon_index(N);
    ind_ += weight * idx;
    trace("order " + std::to_string(r) + ": phi " + Lr.phi.to_string() + " polygon " + join_vertices(N) +
          " index " + std::to_string(idx) + " x " + std::to_string(weight));
    const TowerPtr Fr = field_at(r);
    for (const auto& S : N.sides) {
      const TPoly R = residual(S, vr, r);
      const auto fac = tpoly::factorize(*Fr, R, opts_.seed);
      trace("  side slope -" + std::to_string(S.h) + "/" + std::to_string(S.e) + " residual " +
            tpoly::to_string(*Fr, R));
      for (const auto& [psi, mult] : fac) {
        if (mult < 2) continue;
        Level& cur = levels_.back();
        cur.h = S.h;
        cur.e = S.e;
        cur.ell = 0;
        if (S.e > 1)
          while ((cur.ell * S.h) % S.e != 1) ++cur.ell;
        cur.f = tpoly::degree(psi);
        Level next{next_phi(r, psi), cur.e * cur.f * cur.W(), TowerExt::make(Fr, psi)};
        levels_.push_back(std::move(next));
        step(mult, weight * tpoly::degree(psi));
        levels_.pop_back();
      }
    }
  }

  // phi_{r+1} = phi_r^(e f) + sum_{j<f} lift_r(psi_j, (f-j) W) phi_r^(j e).
  BiPoly next_phi(int r, const TPoly& psi) {
    const Level& L = levels_[static_cast<std::size_t>(r) - 1];
    const Tower& Fr = *field_at(r);
    const int fdeg = tpoly::degree(psi);
    const BiPoly phie = pow(L.phi, static_cast<u64>(L.e));
    BiPoly out(f_.field());
    BiPoly phipow = BiPoly::from_t(Poly::constant(f_.field(), 1));
    for (int j = 0; j < fdeg; ++j) {
      if (!Fr.is_zero(psi[j])) out += lift(r, psi[j], (fdeg - j) * L.W()) * phipow;
      phipow *= phie;
    }
    return out + phipow;
  }

  const DefiningPoly& f_;
  const PrimeLocal& P_;
  const MontesOptions& opts_;
  std::vector<Level> levels_;
  std::vector<Poly> ppow_;
  MontesResult result_;
  i64 ind_ = 0;
  i64 nodes_ = 0, budget_ = 0;
};

}  // namespace

MontesResult montes_ind(const DefiningPoly& f, const PrimeLocal& P, const MontesOptions& opts) {
  if (opts.delta_p && *opts.delta_p <= 1) return {};
  return Engine(f, P, opts).run();
}

MontesResult montes_ind_infinity(const DefiningPoly& f, const MontesOptions& opts) {
  const DefiningPoly finf = to_infinity(f, compute_Cf(f));
  const PrimeLocal P = PrimeLocal::make(Poly::var(f.field()), true);
  return montes_ind(finf, P, opts);
}

TPoly residual_poly_order1(const DefiningPoly& f, const PrimeLocal& P, const TPoly& psi0, std::size_t side) {
  MontesOptions opts;
  return Engine(f, P, opts).residual_order1(psi0, side);
}

}  // namespace ffg
