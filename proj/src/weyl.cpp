#include "hodge/weyl.hpp"

#include <algorithm>
#include <cctype>

#include "hodge/detail/expr_parser.hpp"

namespace hodge {

WeylRingPtr WeylRing::make(const Ring& base, std::vector<std::string> central) {
  auto r = std::shared_ptr<WeylRing>(new WeylRing());
  r->base_ = base;
  r->central_ = std::move(central);
  std::vector<std::string> names = base->names(), sym = base->names();
  for (const auto& x : base->names()) {
    names.push_back("d" + x);
    sym.push_back("xi_" + x);
  }
  for (const auto& c : r->central_) {
    names.push_back(c);
    sym.push_back(c);
  }
  r->shadow_ = PolyRing::make(names);
  r->symbol_ = PolyRing::make(sym);
  for (std::size_t k = 0; k < r->central_.size(); ++k)
    if (r->central_[k] == "s") r->s_index_ = static_cast<int>(2 * base->nvars() + k);
  r->alg_.nvars = names.size();
  for (std::size_t i = 0; i < base->nvars(); ++i)
    r->alg_.pairs.emplace_back(static_cast<int>(i), static_cast<int>(base->nvars() + i));
  return r;
}

bool same_weyl_ring(const WeylRingPtr& a, const WeylRingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

WeylOperator::WeylOperator(WeylRingPtr ring, Polynomial normally_ordered)
    : ring_(std::move(ring)), p_(std::move(normally_ordered)) {
  if (p_.is_zero()) p_ = Polynomial(ring_->shadow());
  if (!same_ring(p_.ring(), ring_->shadow())) throw RingMismatch("operator polynomial from another ring");
}

WeylOperator WeylOperator::constant(WeylRingPtr ring, const Rational& c) {
  Polynomial p = Polynomial::constant(ring->shadow(), c);
  return WeylOperator(std::move(ring), std::move(p));
}
WeylOperator WeylOperator::x(WeylRingPtr ring, std::size_t i) {
  Polynomial p = Polynomial::variable(ring->shadow(), ring->x_index(i));
  return WeylOperator(std::move(ring), std::move(p));
}
WeylOperator WeylOperator::d(WeylRingPtr ring, std::size_t i) {
  Polynomial p = Polynomial::variable(ring->shadow(), ring->d_index(i));
  return WeylOperator(std::move(ring), std::move(p));
}
WeylOperator WeylOperator::central(WeylRingPtr ring, std::size_t k) {
  Polynomial p = Polynomial::variable(ring->shadow(), ring->central_index(k));
  return WeylOperator(std::move(ring), std::move(p));
}
WeylOperator WeylOperator::s(WeylRingPtr ring) {
  if (!ring->has_s()) throw InputError("ring has no s");
  Polynomial p = Polynomial::variable(ring->shadow(), static_cast<std::size_t>(ring->s_index()));
  return WeylOperator(std::move(ring), std::move(p));
}
WeylOperator WeylOperator::from_polynomial(WeylRingPtr ring, const Polynomial& p) {
  Polynomial q = p.is_zero() ? Polynomial(ring->shadow()) : p.embed(ring->shadow());
  return WeylOperator(std::move(ring), std::move(q));
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (!ring_) *this = WeylOperator(o.ring_);
  p_ += o.p_;
  return *this;
}
WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  if (!ring_) *this = WeylOperator(o.ring_);
  p_ -= o.p_;
  return *this;
}

namespace {

Integer denominator_lcm(const Polynomial& p) {
  Integer L = 1;
  for (const auto& t : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.second.get_den_mpz_t());
  return L;
}

}  // namespace

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  if (!same_weyl_ring(a.ring_, b.ring_)) throw RingMismatch("operators from different Weyl rings");
  if (a.is_zero() || b.is_zero()) return WeylOperator(a.ring_);
  const TermOrder ord = TermOrder::degrevlex();
  detail::Engine eng(a.ring_->algebra(), ord);
  detail::Poly pa = to_engine(a.p_, ord), pb = to_engine(b.p_, ord);
  Rational div = Rational(denominator_lcm(a.p_) * denominator_lcm(b.p_));
  return WeylOperator(a.ring_, from_engine(a.ring_->shadow(), eng.mul(pa, pb), false, div));
}

WeylOperator weyl_multiply(const WeylOperator& P, const WeylOperator& Q) { return P * Q; }

WeylOperator WeylOperator::pow(unsigned k) const {
  WeylOperator r = constant(ring_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

WeylOperator WeylOperator::embed(const WeylRingPtr& target) const {
  if (p_.is_zero()) return WeylOperator(target);
  return WeylOperator(target, p_.embed(target->shadow()));
}

WeylOperator WeylOperator::specialize_central(std::size_t k, const Rational& value) const {
  const Ring& R = ring_->shadow();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
  images[ring_->central_index(k)] = Polynomial::constant(R, value);
  return WeylOperator(ring_, p_.substitute(R, images));
}

WeylOperator WeylOperator::shift_s(const Rational& shift) const {
  if (!ring_->has_s()) throw InputError("ring has no s");
  const Ring& R = ring_->shadow();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
  auto si = static_cast<std::size_t>(ring_->s_index());
  images[si] = images[si] + Polynomial::constant(R, shift);
  return WeylOperator(ring_, p_.substitute(R, images));
}

bool WeylOperator::is_function() const {
  for (std::size_t i = 0; i < ring_->n(); ++i)
    if (p_.uses_variable(ring_->d_index(i))) return false;
  return true;
}

namespace {

struct OpCtx {
  WeylRingPtr ring;
  WeylOperator constant(const Rational& q) const { return WeylOperator::constant(ring, q); }
  WeylOperator identifier(std::string_view id, std::size_t pos) const {
    int i = ring->shadow()->index_of(id);
    if (i >= 0) {
      return WeylOperator(ring, Polynomial::variable(ring->shadow(), static_cast<std::size_t>(i)));
    }
    if (id.size() > 1 && id[0] == 'd') {
      bool digits = true;
      for (char c : id.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
      if (digits) {
        std::size_t k = std::stoul(std::string(id.substr(1)));
        if (k >= 1 && k <= ring->n()) return WeylOperator::d(ring, k - 1);
      }
    }
    throw ParseError("unknown operator symbol '" + std::string(id) + "'", pos);
  }
  WeylOperator multiply(const WeylOperator& a, const WeylOperator& b) const { return a * b; }
};

}  // namespace

WeylOperator parse_operator(std::string_view text, const WeylRingPtr& ring) {
  OpCtx ctx{ring};
  detail::ExprParser<WeylOperator, OpCtx> p(text, ctx);
  WeylOperator r = p.parse();
  if (!r.ring()) return WeylOperator(ring);
  return r;
}

WeylIdeal::WeylIdeal(WeylRingPtr ring, std::vector<WeylOperator> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_weyl_ring(g.ring(), ring_)) throw RingMismatch("left ideal generator from another ring");
    gens_.push_back(std::move(g));
  }
}

std::string WeylIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

const WeylGroebnerBasis& WeylIdeal::groebner(const TermOrder& ord) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    for (auto& [o, g] : cache_->entries)
      if (o == ord) return *g;
  }
  auto G = std::make_shared<WeylGroebnerBasis>(weyl_buchberger(*this, ord));
  std::lock_guard<std::mutex> lk(cache_->mu);
  for (auto& [o, g] : cache_->entries)
    if (o == ord) return *g;
  cache_->entries.emplace_back(ord, G);
  return *G;
}

bool WeylGroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].normal_form_poly().is_constant();
}

WeylGroebnerBasis weyl_buchberger(const WeylIdeal& I, const TermOrder& ord, const Budget& budget) {
  detail::Engine eng(I.ring()->algebra(), ord, budget);
  std::vector<detail::Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(to_engine(g.normal_form_poly(), ord));
  WeylGroebnerBasis G;
  G.ring_ = I.ring();
  G.order_ = ord;
  G.internal_ = eng.groebner(std::move(gens), &G.stats_);
  for (const auto& p : G.internal_)
    G.basis_.emplace_back(I.ring(), from_engine(I.ring()->shadow(), p, true));
  return G;
}

WeylGroebnerBasis weyl_buchberger(const WeylIdeal& I, const TermOrder& ord) {
  return weyl_buchberger(I, ord, default_budget());
}

WeylOperator weyl_normal_form(const WeylOperator& P, const WeylGroebnerBasis& G) {
  if (P.is_zero()) return WeylOperator(G.ring());
  if (!same_weyl_ring(P.ring(), G.ring())) throw RingMismatch("normal form across Weyl rings");
  detail::Engine eng(G.ring()->algebra(), G.order());
  Rational sc;
  Integer L = denominator_lcm(P.normal_form_poly());
  detail::Poly r = eng.reduce(to_engine(P.normal_form_poly(), G.order()), G.internal(), &sc, true);
  return WeylOperator(G.ring(), from_engine(G.ring()->shadow(), r, false, sc * L));
}

bool weyl_contains(const WeylGroebnerBasis& G, const WeylOperator& P) {
  return weyl_normal_form(P, G).is_zero();
}

bool satisfies_spair_criterion(const WeylGroebnerBasis& G) {
  detail::Engine eng(G.ring()->algebra(), G.order());
  const auto& B = G.internal();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!eng.reduce(eng.spoly(B[i], B[j]), B, nullptr, true).empty()) return false;
  return true;
}

TermOrder sharp_order(const WeylRing& R) {
  std::vector<std::int64_t> w(R.nvars(), 0);
  for (std::size_t i = 0; i < R.n(); ++i) w[R.d_index(i)] = 1;
  if (R.has_s()) w[static_cast<std::size_t>(R.s_index())] = 1;
  return TermOrder::weighted(w);
}

TermOrder ord_order(const WeylRing& R) {
  std::vector<std::int64_t> w(R.nvars(), 0);
  for (std::size_t i = 0; i < R.n(); ++i) w[R.d_index(i)] = 1;
  return TermOrder::weighted(w);
}

namespace {

OrderAndSymbol symbol_by(const WeylOperator& P, bool with_s) {
  if (P.is_zero()) throw InputError("symbol of the zero operator");
  const WeylRing& R = *P.ring();
  auto weight = [&](const Monomial& m) {
    int w = 0;
    for (std::size_t i = 0; i < R.n(); ++i) w += m[R.d_index(i)];
    if (with_s && R.has_s()) w += m[static_cast<std::size_t>(R.s_index())];
    return w;
  };
  int top = -1;
  for (const auto& t : P.terms()) top = std::max(top, weight(t.first));
  std::vector<Polynomial::Term> terms;
  for (const auto& t : P.terms())
    if (weight(t.first) == top) terms.push_back(t);
  return {top, Polynomial::from_terms(R.symbol_ring(), std::move(terms))};
}

}  // namespace

OrderAndSymbol sharp_order_and_symbol(const WeylOperator& P) { return symbol_by(P, true); }
OrderAndSymbol ord_symbol(const WeylOperator& P) { return symbol_by(P, false); }
int sharp_order_of(const WeylOperator& P) { return symbol_by(P, true).order; }

WeylIdeal weyl_eliminate(const WeylIdeal& I, const std::vector<std::string>& drop) {
  const WeylRing& R = *I.ring();
  std::vector<bool> mask(R.nvars(), false);
  for (const auto& name : drop) {
    int i = R.shadow()->index_of(name);
    if (i < 0) throw InputError("unknown variable '" + name + "' in elimination set");
    mask[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < R.n(); ++i)
    if (mask[R.x_index(i)] != mask[R.d_index(i)])
      throw InputError("elimination set must contain x_i exactly when it contains d_i");
  const WeylGroebnerBasis& G = I.groebner(TermOrder::block_elimination(mask));
  std::vector<WeylOperator> out;
  for (const auto& g : G.basis()) {
    bool free = true;
    for (std::size_t v = 0; v < R.nvars(); ++v)
      if (mask[v] && g.uses_variable(v)) free = false;
    if (free) out.push_back(g);
  }
  return WeylIdeal(I.ring(), out);
}

Ring central_ring(const WeylRing& R) { return PolyRing::make(R.central()); }

Ideal weyl_eliminate_to_central(const WeylIdeal& I) {
  const WeylRing& R = *I.ring();
  std::vector<std::string> drop;
  for (std::size_t i = 0; i < 2 * R.n(); ++i) drop.push_back(R.shadow()->name(i));
  WeylIdeal E = weyl_eliminate(I, drop);
  Ring C = central_ring(R);
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.normal_form_poly().embed(C));
  return Ideal(C, gens);
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("division by zero polynomial");
  const TermOrder ord = TermOrder::degrevlex();
  const auto& lb = b.terms().front();
  Polynomial r = a, q(a.ring());
  while (!r.is_zero()) {
    const auto lt = r.terms().front();
    if (!lb.first.divides(lt.first)) return std::nullopt;
    Polynomial t = Polynomial::monomial(a.ring(), lt.first / lb.first, lt.second / lb.second);
    q += t;
    r -= t * b;
  }
  (void)ord;
  return q;
}

Ring fs_ring(const WeylRing& R) { return R.base()->extended({"s"}); }

FsExpression::FsExpression(Polynomial f, Polynomial numerator, unsigned m, long shift)
    : f_(std::move(f)), num_(std::move(numerator)), m_(m), shift_(shift) {
  reduce();
}

FsExpression FsExpression::power(const Polynomial& f, const Ring& fsr, long shift) {
  return FsExpression(f, Polynomial::constant(fsr, 1), 0, shift);
}

void FsExpression::reduce() {
  if (num_.is_zero()) {
    m_ = 0;
    return;
  }
  Polynomial fe = f_.embed(num_.ring());
  while (m_ > 0) {
    auto q = divide_exact(num_, fe);
    if (!q) break;
    num_ = *q;
    --m_;
  }
}

std::pair<Polynomial, long> FsExpression::specialize(const Rational& s0) const {
  const Ring& B = f_.ring();
  Rational k = s0 + shift_ - static_cast<long>(m_);
  if (k.get_den() != 1) throw InputError("specialization at a non-integral exponent");
  std::vector<Polynomial> images;
  const Ring& S = num_.ring();
  for (std::size_t i = 0; i < S->nvars(); ++i) {
    if (S->name(i) == "s") images.push_back(Polynomial::constant(B, s0));
    else images.push_back(Polynomial::variable(B, B->require_index(S->name(i))));
  }
  Polynomial v = num_.substitute(B, images);
  long e = k.get_num().get_si();
  if (e >= 0) return {v * f_.pow(static_cast<unsigned>(e)), 0};
  return {v, e};
}

bool operator==(const FsExpression& a, const FsExpression& b) {
  return a.f_ == b.f_ && a.num_ == b.num_ && a.m_ == b.m_ && a.shift_ == b.shift_;
}

std::string FsExpression::to_string() const {
  std::string base = "(" + num_.to_string() + ")";
  if (m_) base += "/(" + f_.to_string() + ")^" + std::to_string(m_);
  std::string sh = shift_ == 0 ? "s" : (shift_ > 0 ? "s+" + std::to_string(shift_) : "s" + std::to_string(shift_));
  return base + " * f^(" + sh + ")";
}

FsExpression act_on_fs(const WeylOperator& P, const FsExpression& e) {
  const WeylRing& R = *P.ring();
  const Ring& S = e.numerator().ring();
  const std::size_t n = R.n();
  const Polynomial f = e.f().embed(S);
  const std::size_t si = S->require_index("s");
  const Polynomial svar = Polynomial::variable(S, si);
  std::vector<Polynomial> df;
  std::vector<std::size_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = S->require_index(R.base()->name(i));
    df.push_back(partial_derivative(f, xs[i]));
  }
  struct Val {
    Polynomial num;
    unsigned m;
  };
  std::map<std::vector<std::uint16_t>, Val> memo;
  std::vector<std::uint16_t> zero(n, 0);
  memo[zero] = {e.numerator(), e.denominator_exponent()};
  const long l = e.shift();
  std::function<const Val&(const std::vector<std::uint16_t>&)> get =
      [&](const std::vector<std::uint16_t>& b) -> const Val& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!b[i]) ++i;
    auto prev = b;
    --prev[i];
    Val v = get(prev);
    // d_i (N/f^m) f^(s+l) = (f d_i N + (s+l-m) N d_i f) / f^(m+1) f^(s+l)
    Polynomial coef = svar + Polynomial::constant(S, Rational(l - static_cast<long>(v.m)));
    Val out{f * partial_derivative(v.num, xs[i]) + coef * v.num * df[i], v.m + 1};
    return memo.emplace(b, std::move(out)).first->second;
  };
  std::vector<std::pair<Polynomial, unsigned>> parts;
  unsigned M = 0;
  for (const auto& [mono, c] : P.terms()) {
    std::vector<std::uint16_t> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = mono[R.d_index(i)];
    const Val& v = get(b);
    Monomial mult;
    for (std::size_t i = 0; i < n; ++i) mult[xs[i]] = mono[R.x_index(i)];
    for (std::size_t k = 0; k < R.ncentral(); ++k) {
      if (!mono[R.central_index(k)]) continue;
      if (R.central()[k] != "s") throw InputError("operator uses a central variable other than s");
      mult[si] = mono[R.central_index(k)];
    }
    parts.emplace_back(v.num.mul_monomial(mult, c), v.m);
    M = std::max(M, v.m);
  }
  Polynomial total(S);
  std::vector<Polynomial> fpow{Polynomial::constant(S, 1)};
  for (auto& [num, m] : parts) {
    while (fpow.size() <= M - m) fpow.push_back(fpow.back() * f);
    total += num * fpow[M - m];
  }
  return FsExpression(e.f(), total, total.is_zero() ? 0 : M, l);
}

FsExpression act_on_power(const WeylOperator& P, const Polynomial& f, long shift) {
  return act_on_fs(P, FsExpression::power(f, fs_ring(*P.ring()), shift));
}

bool annihilates(const WeylOperator& P, const Polynomial& f, long shift) {
  return act_on_power(P, f, shift).is_zero();
}

}  // namespace hodge
