#include "hodge/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hodge {

namespace {

thread_local Budget g_default_budget{};

std::string fresh_name(const Ring& ring, const std::string& base, std::size_t k = 0) {
  for (std::size_t i = 0;; ++i) {
    std::string n = base + (i ? std::to_string(i) : "") + (k ? "_" + std::to_string(k) : "");
    if (ring->index_of(n) < 0) return n;
  }
}

}  // namespace

void set_default_budget(const Budget& b) { g_default_budget = b; }
const Budget& default_budget() { return g_default_budget; }

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> v;
  for (const auto& p : internal_) v.push_back(p.front().m);
  return v;
}

detail::Poly to_engine(const Polynomial& p, const TermOrder& ord) {
  Integer L = 1;
  for (const auto& t : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.second.get_den_mpz_t());
  detail::Poly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.second.get_num() * (L / t.second.get_den());
    out.push_back({t.first, std::move(c)});
  }
  detail::Engine(detail::Algebra::commutative(0), ord).canonicalize(out);
  return out;
}

Polynomial from_engine(const Ring& ring, const detail::Poly& p, bool monic, const Rational& divisor) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  Rational d = divisor;
  if (monic && !p.empty()) d = Rational(p.front().c);
  for (const auto& t : p) terms.emplace_back(t.m, Rational(t.c) / d);
  return Polynomial::from_terms(ring, std::move(terms));
}

GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord, const Budget& budget) {
  detail::Engine eng(detail::Algebra::commutative(I.ring()->nvars()), ord, budget);
  std::vector<detail::Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(to_engine(g, ord));
  GroebnerBasis G;
  G.ideal_ = I;
  G.order_ = ord;
  G.internal_ = eng.groebner(std::move(gens));
  for (const auto& p : G.internal_) G.basis_.push_back(from_engine(I.ring(), p, true));
  return G;
}

GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord) {
  return buchberger(I, ord, default_budget());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (!p.is_zero() && !same_ring(p.ring(), G.ring()))
    throw RingMismatch("normal form across different rings");
  if (p.is_zero()) return Polynomial(G.ring());
  detail::Engine eng(detail::Algebra::commutative(G.ring()->nvars()), G.order());
  Rational sc;
  Integer L = 1;
  for (const auto& t : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.second.get_den_mpz_t());
  detail::Poly r = eng.reduce(to_engine(p, G.order()), G.internal(), &sc, true);
  return from_engine(G.ring(), r, false, sc * L);
}

bool contains(const GroebnerBasis& G, const Polynomial& p) { return normal_form(p, G).is_zero(); }

bool ideal_contains(const Ideal& big, const Ideal& small) {
  GroebnerBasis G = buchberger(big);
  for (const auto& g : small.generators())
    if (!contains(G, g)) return false;
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("comparing ideals of different rings");
  return buchberger(a).basis() == buchberger(b).basis();
}

bool satisfies_spair_criterion(const GroebnerBasis& G) {
  detail::Engine eng(detail::Algebra::commutative(G.ring()->nvars()), G.order());
  const auto& B = G.internal();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!eng.reduce(eng.spoly(B[i], B[j]), B, nullptr, true).empty()) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), g);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) g.push_back(p * q);
  return Ideal(a.ring(), g);
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal r(a.ring(), {Polynomial::constant(a.ring(), 1)});
  for (unsigned i = 0; i < k; ++i) r = Ideal(a.ring(), buchberger(ideal_product(r, a)).basis());
  return r;
}

Ideal ideal_times(const Polynomial& f, const Ideal& a) {
  std::vector<Polynomial> g;
  for (const auto& p : a.generators()) g.push_back(f * p);
  return Ideal(a.ring(), g);
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
  const std::size_t n = I.ring()->nvars();
  std::vector<bool> mask(n, false);
  for (auto d : drop) {
    if (d >= n) throw InputError("eliminated variable out of range");
    mask[d] = true;
  }
  GroebnerBasis G = buchberger(I, TermOrder::block_elimination(mask));
  std::vector<Polynomial> out;
  for (const auto& p : G.basis()) {
    bool free = true;
    for (auto d : drop)
      if (p.uses_variable(d)) free = false;
    if (free) out.push_back(p);
  }
  return Ideal(I.ring(), out);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  std::vector<std::size_t> idx;
  for (const auto& d : drop) idx.push_back(I.ring()->require_index(d));
  return eliminate(I, idx);
}

Ideal change_ring(const Ideal& I, const Ring& target) {
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(p.embed(target));
  return Ideal(target, g);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("intersecting ideals of different rings");
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring(), {});
  Ring R = I.ring();
  Ring Rt = R->extended({fresh_name(R, "_t")});
  const std::size_t t = R->nvars();
  Polynomial T = Polynomial::variable(Rt, t);
  Polynomial one = Polynomial::constant(Rt, 1);
  std::vector<Polynomial> g;
  for (const auto& p : I.generators()) g.push_back(T * p.embed(Rt));
  for (const auto& p : J.generators()) g.push_back((one - T) * p.embed(Rt));
  Ideal E = eliminate(Ideal(Rt, g), std::vector<std::size_t>{t});
  return change_ring(E, R);
}

namespace {

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  const TermOrder ord = TermOrder::degrevlex();
  Polynomial rem = h, q(h.ring());
  const auto lg = g.leading_term(ord);
  while (!rem.is_zero()) {
    const auto lt = rem.terms().front();
    if (!lg.first.divides(lt.first)) throw Error("inexact polynomial division");
    Polynomial t = Polynomial::monomial(h.ring(), lt.first / lg.first, lt.second / lg.second);
    q += t;
    rem -= t * g;
  }
  return q;
}

Ideal quotient_by(const Ideal& I, const Polynomial& g) {
  Ideal K = intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> out;
  for (const auto& h : K.generators()) out.push_back(exact_divide(h, g));
  return Ideal(I.ring(), buchberger(Ideal(I.ring(), out)).basis());
}

Ideal saturate_by(const Ideal& I, const Polynomial& g) {
  Ring R = I.ring();
  Ring Rt = R->extended({fresh_name(R, "_t")});
  const std::size_t t = R->nvars();
  std::vector<Polynomial> gens;
  for (const auto& p : I.generators()) gens.push_back(p.embed(Rt));
  gens.push_back(Polynomial::constant(Rt, 1) - Polynomial::variable(Rt, t) * g.embed(Rt));
  Ideal E = eliminate(Ideal(Rt, gens), std::vector<std::size_t>{t});
  return Ideal(R, buchberger(change_ring(E, R)).basis());
}

Ideal unit_ideal(const Ring& R) { return Ideal(R, {Polynomial::constant(R, 1)}); }

}  // namespace

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("quotient of ideals of different rings");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = quotient_by(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return unit_ideal(I.ring());
  return Ideal(I.ring(), buchberger(*acc).basis());
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("saturation of ideals of different rings");
  if (J.generators().size() == 1) return saturate_by(I, J.generators().front());
  Ideal cur(I.ring(), buchberger(I).basis());
  for (;;) {
    Ideal next = quotient(cur, J);
    if (next.generators() == cur.generators()) return cur;
    cur = next;
  }
}

std::pair<Ideal, Ideal> quotient_and_saturation(const Ideal& I, const Ideal& J) {
  return {quotient(I, J), saturation(I, J)};
}

namespace {

// Submodule of R^{1+m} generated by (g_i, e_i), encoded in R[e_0..e_m]
// modulo all quadratic monomials in the e's. Terms with e_0 dominate.
struct LiftModule {
  Ring R, Re;
  std::size_t n, m;
  TermOrder ord;
  GroebnerBasis G;

  explicit LiftModule(const std::vector<Polynomial>& gens) {
    R = gens.front().ring();
    n = R->nvars();
    m = gens.size();
    std::vector<std::string> extra;
    for (std::size_t i = 0; i <= m; ++i) extra.push_back(fresh_name(R, "_e", i + 1));
    Re = R->extended(extra);
    std::vector<std::int64_t> w(n + m + 1, 0);
    w[n] = 1;
    ord = TermOrder::weighted(w);
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < m; ++i)
      g.push_back(gens[i].embed(Re) * e(0) + e(i + 1));
    for (std::size_t a = 0; a <= m; ++a)
      for (std::size_t b = a; b <= m; ++b) g.push_back(e(a) * e(b));
    G = buchberger(Ideal(Re, g), ord);
  }

  Polynomial e(std::size_t i) const { return Polynomial::variable(Re, n + i); }

  // Coefficient of e_i in an e-linear polynomial, moved back to R.
  Polynomial component(const Polynomial& p, std::size_t i) const {
    std::vector<Polynomial::Term> terms;
    for (const auto& [mono, c] : p.terms()) {
      if (!mono[n + i]) continue;
      Monomial mm = mono;
      mm[n + i] = 0;
      terms.emplace_back(mm, c);
    }
    return Polynomial::from_terms(R, std::move(terms));
  }
};

}  // namespace

SyzygyModule syzygies(const std::vector<Polynomial>& gens) {
  SyzygyModule S;
  S.source = gens;
  if (gens.empty()) return S;
  const Ring& R = gens.front().ring();
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_zero()) {
      nz.push_back(i);
      continue;
    }
    std::vector<Polynomial> e(gens.size(), Polynomial(R));
    e[i] = Polynomial::constant(R, 1);
    S.generators.push_back(std::move(e));
  }
  if (nz.empty()) return S;
  if (nz.size() < gens.size()) {
    std::vector<Polynomial> sub;
    for (auto i : nz) sub.push_back(gens[i]);
    for (auto& v : syzygies(sub).generators) {
      std::vector<Polynomial> e(gens.size(), Polynomial(R));
      for (std::size_t k = 0; k < nz.size(); ++k) e[nz[k]] = std::move(v[k]);
      S.generators.push_back(std::move(e));
    }
    return S;
  }
  LiftModule M(gens);
  for (const auto& p : M.G.basis()) {
    int edeg = -1;
    bool has_e0 = false;
    for (const auto& [mono, c] : p.terms()) {
      int d = 0;
      for (std::size_t i = 0; i <= M.m; ++i) d += mono[M.n + i];
      edeg = d;
      if (mono[M.n]) has_e0 = true;
    }
    if (edeg != 1 || has_e0) continue;
    std::vector<Polynomial> v;
    for (std::size_t i = 1; i <= M.m; ++i) v.push_back(M.component(p, i));
    Polynomial check(S.source.front().ring());
    for (std::size_t i = 0; i < M.m; ++i) check += v[i] * gens[i];
    if (!check.is_zero()) throw Error("internal error: syzygy verification failed");
    S.generators.push_back(std::move(v));
  }
  return S;
}

namespace {

// Vectors of R^r as e-linear forms in R[e_1..e_r] modulo all e_a e_b.
struct ModuleEncoding {
  Ring R, Re;
  std::size_t n, r;

  explicit ModuleEncoding(const Ring& ring, std::size_t rank) : R(ring), n(ring->nvars()), r(rank) {
    std::vector<std::string> extra;
    for (std::size_t i = 0; i < r; ++i) extra.push_back(fresh_name(R, "_m", i + 1));
    Re = R->extended(extra);
  }
  Polynomial encode(const std::vector<Polynomial>& v) const {
    if (v.size() != r) throw InputError("module element has the wrong rank");
    Polynomial p(Re);
    for (std::size_t i = 0; i < r; ++i) p += v[i].embed(Re) * Polynomial::variable(Re, n + i);
    return p;
  }
  Ideal span(const std::vector<std::vector<Polynomial>>& gens) const {
    std::vector<Polynomial> g;
    for (const auto& v : gens) g.push_back(encode(v));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a; b < r; ++b)
        g.push_back(Polynomial::variable(Re, n + a) * Polynomial::variable(Re, n + b));
    return Ideal(Re, g);
  }
};

}  // namespace

bool module_contains(const std::vector<std::vector<Polynomial>>& gens, const std::vector<Polynomial>& v) {
  if (v.empty()) throw InputError("empty module element");
  bool zero = true;
  for (const auto& c : v) zero = zero && c.is_zero();
  if (zero) return true;
  if (gens.empty()) return false;
  ModuleEncoding E(v.front().ring(), v.size());
  return contains(buchberger(E.span(gens)), E.encode(v));
}

std::vector<std::vector<Polynomial>> minimize_generators(std::vector<std::vector<Polynomial>> gens) {
  auto degree = [](const std::vector<Polynomial>& v) {
    int d = -1;
    for (const auto& c : v)
      if (!c.is_zero()) d = std::max(d, c.total_degree());
    return d;
  };
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const auto& a, const auto& b) { return degree(a) > degree(b); });
  for (std::size_t k = 0; k < gens.size();) {
    std::vector<std::vector<Polynomial>> others;
    for (std::size_t l = 0; l < gens.size(); ++l)
      if (l != k) others.push_back(gens[l]);
    if (degree(gens[k]) < 0 || module_contains(others, gens[k])) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  std::reverse(gens.begin(), gens.end());
  return gens;
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& p, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (p.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(p.ring()));
  if (nz.empty()) return std::nullopt;
  LiftModule M(nz);
  Polynomial r = normal_form(p.embed(M.Re) * M.e(0), M.G);
  if (!M.component(r, 0).is_zero()) return std::nullopt;
  std::vector<Polynomial> a;
  std::size_t k = 0;
  Polynomial check(p.ring());
  for (const auto& g : gens) {
    if (g.is_zero()) {
      a.push_back(Polynomial(p.ring()));
      continue;
    }
    a.push_back(-M.component(r, ++k));
    check += a.back() * g;
  }
  if (check != p) throw Error("internal error: lift verification failed");
  return a;
}

DimHeight dimension_height(const Ideal& I) {
  const std::size_t N = I.ring()->nvars();
  GroebnerBasis G = buchberger(I);
  if (G.is_unit()) throw InputError("dimension of the unit ideal");
  if (N > 20) throw InputError("too many variables for the dimension computation");
  std::vector<std::uint32_t> supports;
  for (const auto& m : G.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t S = 0; S < (1u << N); ++S) {
    int pc = __builtin_popcount(S);
    if (pc <= best) continue;
    bool indep = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        indep = false;
        break;
      }
    if (indep) best = pc;
  }
  return {best, static_cast<int>(N) - best};
}

Ideal rees_kernel(const std::vector<Polynomial>& gens, const std::string& xi_prefix) {
  if (gens.empty()) throw InputError("Rees kernel of an empty list");
  Ring R = gens.front().ring();
  const std::size_t n = R->nvars(), m = gens.size();
  std::vector<std::string> xi;
  for (std::size_t i = 0; i < m; ++i) xi.push_back(xi_prefix + std::to_string(i + 1));
  Ring Rx = R->extended(xi);
  Ring Rxt = Rx->extended({fresh_name(Rx, "_t")});
  Polynomial T = Polynomial::variable(Rxt, n + m);
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i].is_zero()) throw InputError("Rees kernel of a zero generator");
    g.push_back(Polynomial::variable(Rxt, n + i) - T * gens[i].embed(Rxt));
  }
  Ideal E = eliminate(Ideal(Rxt, g), std::vector<std::size_t>{n + m});
  return Ideal(Rx, buchberger(change_ring(E, Rx)).basis());
}

AssociatedPrimeResult is_associated_prime(const Ideal& I, const Ideal& P, int degree_bound) {
  if (!ideal_contains(P, I)) throw InputError("candidate prime does not contain the ideal");
  AssociatedPrimeResult res;
  GroebnerBasis GI = buchberger(I);
  GroebnerBasis GP = buchberger(P);
  Ideal Q = quotient(I, P);
  GroebnerBasis GQ = buchberger(Q);
  if (GQ.basis() == GI.basis()) {
    res.verdict = Association::NotAssociated;
    return res;
  }
  if (degree_bound < 0) {
    int d = 0;
    for (const auto& g : I.generators()) d = std::max(d, g.total_degree());
    degree_bound = 2 + d;
  }
  auto try_witness = [&](const Polynomial& w) -> bool {
    if (w.total_degree() > degree_bound) return false;
    Polynomial r = normal_form(w, GI);
    if (r.is_zero()) return false;
    if (buchberger(quotient(I, Ideal(I.ring(), {r}))).basis() == GP.basis()) {
      res.verdict = Association::Associated;
      res.witness = r;
      return true;
    }
    return false;
  };
  for (const auto& g : GQ.basis())
    if (try_witness(g)) return res;
  // Monomials of (I:P) outside I.
  const std::size_t N = I.ring()->nvars();
  std::vector<Rational> ones(N, 1);
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& mono : monomials_of_weight(ones, d)) {
      Polynomial w = Polynomial::monomial(I.ring(), mono);
      if (!contains(GQ, w) || contains(GI, w)) continue;
      if (try_witness(w)) return res;
    }
  return res;
}

std::vector<Monomial> monomials_of_weight(const std::vector<Rational>& weights, const Rational& t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  Monomial cur;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational left) {
    if (i == weights.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::uint16_t e = 0;; ++e) {
      Rational rest = left - weights[i] * e;
      if (rest < 0) break;
      cur[i] = e;
      rec(i + 1, rest);
    }
    cur[i] = 0;
  };
  rec(0, t);
  return out;
}

namespace {

std::size_t count_in_ideal(const GroebnerBasis& G, const std::vector<Monomial>& monos) {
  auto lms = G.leading_monomials();
  std::size_t c = 0;
  for (const auto& m : monos)
    for (const auto& l : lms)
      if (l.divides(m)) {
        ++c;
        break;
      }
  return c;
}

}  // namespace

GradedPiece graded_piece(const Ideal& J, const std::vector<Rational>& weights, const Rational& t) {
  const std::size_t N = J.ring()->nvars();
  if (weights.size() != N) throw InputError("weight count differs from variable count");
  for (const auto& g : J.generators())
    if (!weighted_degree(g, weights).homogeneous)
      throw InputError("ideal is not weighted-homogeneous: " + g.to_string());
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < N; ++i) vars.push_back(Polynomial::variable(J.ring(), i));
  Ideal S = saturation(J, Ideal(J.ring(), vars));
  auto monos = monomials_of_weight(weights, t);
  GradedPiece r;
  r.dim_ambient = monos.size();
  r.dim_J = count_in_ideal(buchberger(J), monos);
  r.dim_saturation = count_in_ideal(buchberger(S), monos);
  r.vanishes = r.dim_J == r.dim_saturation;
  return r;
}

bool graded_piece_vanishes(const Ideal& J, const std::vector<Rational>& weights, const Rational& t) {
  return graded_piece(J, weights, t).vanishes;
}

bool reduced_check(const Polynomial& f) {
  if (f.is_constant()) throw InputError("reduced_check needs a nonconstant polynomial");
  std::vector<Polynomial> g{f};
  for (auto& d : gradient(f)) g.push_back(d);
  Ideal I(f.ring(), g);
  if (buchberger(I).is_unit()) return true;
  return dimension_height(I).height >= 2;
}

}  // namespace hodge
