#include "hodge/graph.hpp"

#include <algorithm>

namespace hodge {

FFraction make_fraction(const Polynomial& f, Polynomial num, long pow) {
  if (num.is_zero()) return {Polynomial(f.ring()), 0};
  if (pow < 0) {
    num *= f.pow(static_cast<unsigned>(-pow));
    pow = 0;
  }
  while (pow > 0) {
    auto q = divide_exact(num, f);
    if (!q) break;
    num = std::move(*q);
    --pow;
  }
  return {std::move(num), static_cast<unsigned>(pow)};
}

FFraction fraction_add(const Polynomial& f, const FFraction& a, const FFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  unsigned p = std::max(a.pow, b.pow);
  Polynomial n = a.num * f.pow(p - a.pow) + b.num * f.pow(p - b.pow);
  return make_fraction(f, std::move(n), p);
}

FFraction fraction_scale(const Polynomial& f, const FFraction& a, const Polynomial& g) {
  return make_fraction(f, a.num * g, a.pow);
}

FFraction fraction_derivative(const Polynomial& f, const FFraction& a, std::size_t i) {
  if (a.is_zero()) return a;
  Polynomial n = partial_derivative(a.num, i) * f -
                 Polynomial::constant(f.ring(), a.pow) * a.num * partial_derivative(f, i);
  return make_fraction(f, std::move(n), static_cast<long>(a.pow) + 1);
}

bool fraction_equal(const Polynomial& f, const FFraction& a, const FFraction& b) {
  FFraction x = make_fraction(f, a.num, a.pow), y = make_fraction(f, b.num, b.pow);
  return x.pow == y.pow && x.num == y.num;
}

DeltaExpansion::DeltaExpansion(Polynomial f, std::size_t J)
    : f_(std::move(f)), u_(J + 1, FFraction{Polynomial(f_.ring()), 0}) {}

DeltaExpansion DeltaExpansion::delta(const Polynomial& f, FFraction u) {
  DeltaExpansion d(f, 0);
  d.set(0, std::move(u));
  return d;
}

void DeltaExpansion::set(std::size_t j, FFraction u) {
  if (j >= u_.size()) throw InputError("coefficient index beyond the expansion bound");
  u_[j] = make_fraction(f_, std::move(u.num), u.pow);
}

DeltaExpansion DeltaExpansion::with_bound(std::size_t J) const {
  if (J < bound())
    for (std::size_t j = J + 1; j < u_.size(); ++j)
      if (!u_[j].is_zero()) throw InputError("shrinking the bound would drop a nonzero coefficient");
  DeltaExpansion d(f_, J);
  for (std::size_t j = 0; j <= std::min(J, bound()); ++j) d.u_[j] = u_[j];
  return d;
}

std::optional<std::size_t> DeltaExpansion::t_order() const {
  for (std::size_t j = u_.size(); j-- > 0;)
    if (!u_[j].is_zero()) return j;
  return std::nullopt;
}

bool operator==(const DeltaExpansion& a, const DeltaExpansion& b) {
  if (!(a.f_ == b.f_)) return false;
  const std::size_t J = std::max(a.bound(), b.bound());
  FFraction zero{Polynomial(a.f_.ring()), 0};
  for (std::size_t j = 0; j <= J; ++j) {
    const FFraction& x = j <= a.bound() ? a.u_[j] : zero;
    const FFraction& y = j <= b.bound() ? b.u_[j] : zero;
    if (!fraction_equal(a.f_, x, y)) return false;
  }
  return true;
}

DeltaExpansion DeltaExpansion::operator+(const DeltaExpansion& o) const {
  DeltaExpansion r(f_, std::max(bound(), o.bound()));
  for (std::size_t j = 0; j <= r.bound(); ++j) {
    FFraction acc = r.u_[j];
    if (j <= bound()) acc = fraction_add(f_, acc, u_[j]);
    if (j <= o.bound()) acc = fraction_add(f_, acc, o.u_[j]);
    r.u_[j] = acc;
  }
  return r;
}

DeltaExpansion DeltaExpansion::scaled(const Rational& c) const {
  DeltaExpansion r(f_, bound());
  for (std::size_t j = 0; j <= bound(); ++j) r.u_[j] = make_fraction(f_, u_[j].num * c, u_[j].pow);
  return r;
}

Ring graph_function_ring(const Ring& base) { return base->extended({"t"}); }

namespace {

DeltaExpansion act_t(const DeltaExpansion& u) {
  const Polynomial& f = u.f();
  DeltaExpansion r(f, u.bound());
  for (std::size_t j = 0; j <= u.bound(); ++j) {
    const FFraction& c = u.coefficient(j);
    if (c.is_zero()) continue;
    r.set(j, fraction_add(f, r.coefficient(j), fraction_scale(f, c, f)));
    if (j > 0) {
      FFraction m = make_fraction(f, c.num * Rational(-static_cast<long>(j)), c.pow);
      r.set(j - 1, fraction_add(f, r.coefficient(j - 1), m));
    }
  }
  return r;
}

DeltaExpansion act_dt(const DeltaExpansion& u) {
  DeltaExpansion r(u.f(), u.bound() + 1);
  for (std::size_t j = 0; j <= u.bound(); ++j) r.set(j + 1, u.coefficient(j));
  return r;
}

DeltaExpansion act_dx(const DeltaExpansion& u, std::size_t i) {
  const Polynomial& f = u.f();
  if (i >= f.ring()->nvars()) throw InputError("derivation index out of range");
  const Polynomial fi = partial_derivative(f, i);
  DeltaExpansion r(f, u.bound() + 1);
  for (std::size_t j = 0; j <= u.bound(); ++j) {
    const FFraction& c = u.coefficient(j);
    if (c.is_zero()) continue;
    r.set(j, fraction_add(f, r.coefficient(j), fraction_derivative(f, c, i)));
    r.set(j + 1, fraction_add(f, r.coefficient(j + 1), fraction_scale(f, c, -fi)));
  }
  return r;
}

DeltaExpansion act_poly(const DeltaExpansion& u, const Polynomial& g) {
  DeltaExpansion r(u.f(), u.bound());
  for (std::size_t j = 0; j <= u.bound(); ++j) r.set(j, fraction_scale(u.f(), u.coefficient(j), g));
  return r;
}

DeltaExpansion act_function(const DeltaExpansion& u, const Polynomial& g) {
  const Ring& base = u.f().ring();
  const std::size_t n = base->nvars();
  const Ring& G = g.ring();
  if (G->nvars() != n + 1 || G->name(n) != "t") throw InputError("function must live in the graph ring");
  int top = g.degree_in(n);
  std::vector<Polynomial> parts(static_cast<std::size_t>(std::max(top, 0)) + 1, Polynomial(base));
  for (const auto& [m, c] : g.terms()) {
    Monomial mm = m;
    std::size_t a = mm[n];
    mm[n] = 0;
    parts[a] += Polynomial::monomial(base, mm, c);
  }
  DeltaExpansion r(u.f(), u.bound());
  DeltaExpansion tu = u;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (a > 0) tu = act_t(tu);
    if (!parts[a].is_zero()) r = r + act_poly(tu, parts[a]);
  }
  return r;
}

}  // namespace

DeltaExpansion delta_act(const DeltaOp& op, const DeltaExpansion& u) {
  switch (op.kind) {
    case DeltaOp::Kind::Function: return act_function(u, op.g);
    case DeltaOp::Kind::Dx: return act_dx(u, op.i);
    case DeltaOp::Kind::T: return act_t(u);
    case DeltaOp::Kind::Dt: return act_dt(u);
  }
  throw Error("unknown operator kind");
}

FFraction mp_map(const DeltaExpansion& v) {
  const Polynomial& f = v.f();
  FFraction acc{Polynomial(f.ring()), 0};
  Rational fact = 1;
  for (std::size_t j = 0; j <= v.bound(); ++j) {
    if (j > 0) fact *= static_cast<long>(j);
    const FFraction& c = v.coefficient(j);
    if (c.is_zero()) continue;
    acc = fraction_add(f, acc, make_fraction(f, c.num * fact, static_cast<long>(c.pow + j + 1)));
  }
  return acc;
}

HelpComputeResult helpcompute_check(const DeltaExpansion& u) {
  const Polynomial& f = u.f();
  HelpComputeResult res{act_t(u), true, false};
  for (std::size_t j = 0; j <= u.bound(); ++j) {
    FFraction expect = fraction_scale(f, u.coefficient(j), f);
    if (j + 1 <= u.bound()) {
      const FFraction& next = u.coefficient(j + 1);
      expect = fraction_add(f, expect, make_fraction(f, next.num * Rational(-static_cast<long>(j + 1)), next.pow));
    }
    if (!fraction_equal(f, expect, res.v.coefficient(j))) res.coefficients_ok = false;
  }
  res.u0_ok = fraction_equal(f, mp_map(res.v), u.coefficient(0));
  return res;
}

DeltaExpansion pi_f(const WeylOperator& P, const Polynomial& f) {
  const WeylRing& R = *P.ring();
  if (!R.has_s() || R.ncentral() != 1) throw InputError("pi_f needs an operator in D[s]");
  const std::size_t n = R.n(), si = static_cast<std::size_t>(R.s_index());
  const Ring& base = f.ring();
  FFraction finv = make_fraction(f, Polynomial::constant(base, 1), 1);
  DeltaExpansion out(f, 0);
  // (-d_t t)^j f^-1 δ, cached by j.
  std::vector<DeltaExpansion> spow{DeltaExpansion::delta(f, finv)};
  for (const auto& [m, c] : P.terms()) {
    while (spow.size() <= m[si]) spow.push_back(act_dt(act_t(spow.back())).scaled(-1));
    DeltaExpansion w = spow[m[si]];
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < m[R.d_index(i)]; ++e) w = act_dx(w, i);
    Monomial xm;
    for (std::size_t i = 0; i < n; ++i) xm[i] = m[R.x_index(i)];
    out = out + act_poly(w, Polynomial::monomial(base, xm, c));
  }
  return out;
}

FFraction psi_f0(const DeltaExpansion& u) { return u.coefficient(0); }

FFraction apply_to_fraction(const WeylOperator& Q, const Polynomial& f, const FFraction& a) {
  const WeylRing& R = *Q.ring();
  const std::size_t n = R.n();
  for (std::size_t k = 0; k < R.ncentral(); ++k)
    if (Q.uses_variable(R.central_index(k))) throw InputError("operator must be free of central variables");
  FFraction acc{Polynomial(f.ring()), 0};
  for (const auto& [m, c] : Q.terms()) {
    FFraction w = a;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < m[R.d_index(i)]; ++e) w = fraction_derivative(f, w, i);
    Monomial xm;
    for (std::size_t i = 0; i < n; ++i) xm[i] = m[R.x_index(i)];
    acc = fraction_add(f, acc, fraction_scale(f, w, Polynomial::monomial(f.ring(), xm, c)));
  }
  return acc;
}

GraphMaps graph_maps(const WeylOperator& P, const Polynomial& f) {
  const WeylRing& R = *P.ring();
  GraphMaps g{pi_f(P, f), {}, {}, {}, false};
  g.psi = psi_f0(g.pi);
  auto [num, e] = act_on_power(P, f, -1).specialize(0);
  g.specialized = make_fraction(f, num, -e);
  const std::size_t sk = static_cast<std::size_t>(R.s_index()) - R.central_index(0);
  WeylOperator phi = P.specialize_central(sk, 0);
  g.phi0 = apply_to_fraction(phi, f, make_fraction(f, Polynomial::constant(f.ring(), 1), 1));
  g.commutes = fraction_equal(f, g.psi, g.specialized) && fraction_equal(f, g.specialized, g.phi0);
  return g;
}

}  // namespace hodge
