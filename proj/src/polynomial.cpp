#include "hodge/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hodge/detail/expr_parser.hpp"

namespace hodge {

namespace {

const TermOrder& display_order() {
  static const TermOrder ord = TermOrder::degrevlex();
  return ord;
}

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return display_order().compare(a.first, b.first) > 0;
}

}  // namespace

Ring PolyRing::make(std::vector<std::string> names, std::vector<Rational> weights) {
  if (names.size() > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  if (!weights.empty()) {
    if (weights.size() != names.size()) throw InputError("weight count differs from variable count");
    for (const auto& w : weights)
      if (w <= 0) throw InputError("weights must be positive");
  }
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->names_ = std::move(names);
  r->weights_ = std::move(weights);
  return r;
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw InputError("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(i);
}

Ring PolyRing::extended(const std::vector<std::string>& extra) const {
  auto names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return make(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  if (i >= ring->nvars()) throw InputError("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.emplace_back(Monomial::var(i), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials belong to different rings");
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.total_degree();
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first[var]);
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

const Polynomial::Term& Polynomial::leading_term(const TermOrder& ord) const {
  if (terms_.empty()) throw InputError("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = display_order().compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  check_ring(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  check_ring(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_) a.check_ring(b);
  Polynomial r(a.ring_ ? a.ring_ : b.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.first * t.first] += s.second * t.second;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().second;
  return *this * inv;
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_term(ord).second;
  return *this * inv;
}

Polynomial Polynomial::embed(const Ring& target, const std::vector<std::size_t>& map) const {
  Polynomial r(target);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.first[i]) m[map[i]] = t.first[i];
    r.terms_.emplace_back(m, t.second);
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::embed(const Ring& target) const {
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    bool used = uses_variable(i);
    int j = target->index_of(ring_->name(i));
    if (j < 0) {
      if (used) throw RingMismatch("variable '" + ring_->name(i) + "' missing in target ring");
      j = 0;
    }
    map[i] = static_cast<std::size_t>(j);
  }
  return embed(target, map);
}

Polynomial Polynomial::substitute(const Ring& target, const std::vector<Polynomial>& images) const {
  Polynomial r(target);
  std::vector<std::vector<Polynomial>> powers(ring_->nvars());
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.second);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.first[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term *= pw[e];
    }
    r += term;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      for (unsigned k = 0; k < t.first[i]; ++k) v *= point[i];
    s += v;
  }
  return s;
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.first[i]) return true;
  return false;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += hodge::to_string(a);
    } else {
      if (a != 1) out += hodge::to_string(a) + "*";
      out += monomial_to_string(m, ring_->names());
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.terms_ == b.terms_;
}

namespace {

struct PolyCtx {
  Ring ring;
  Polynomial constant(const Rational& q) const { return Polynomial::constant(ring, q); }
  Polynomial identifier(std::string_view id, std::size_t pos) const {
    int i = ring->index_of(id);
    if (i < 0) throw ParseError("unknown variable '" + std::string(id) + "'", pos);
    return Polynomial::variable(ring, static_cast<std::size_t>(i));
  }
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return a * b; }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  PolyCtx ctx{ring};
  detail::ExprParser<Polynomial, PolyCtx> p(text, ctx);
  Polynomial r = p.parse();
  if (!r.ring()) return Polynomial(ring);
  return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->nvars()) throw InputError("variable index out of range");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (!m[var]) continue;
    Monomial d = m;
    d[var] = static_cast<std::uint16_t>(d[var] - 1);
    out.emplace_back(d, c * m[var]);
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return partial_derivative(p, p.ring()->require_index(var));
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < p.ring()->nvars(); ++i) g.push_back(partial_derivative(p, i));
  return g;
}

Rational monomial_weight(const Monomial& m, const std::vector<Rational>& weights) {
  Rational d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m[i];
  return d;
}

WeightedDegree weighted_degree(const Polynomial& p, const std::vector<Rational>& weights) {
  if (weights.size() != p.ring()->nvars()) throw InputError("weight count differs from variable count");
  for (const auto& w : weights)
    if (w <= 0) throw InputError("weights must be positive");
  WeightedDegree r;
  if (p.is_zero()) return r;
  const auto& t0 = p.terms().front();
  r.degree = monomial_weight(t0.first, weights);
  for (const auto& t : p.terms()) {
    if (monomial_weight(t.first, weights) != r.degree) {
      r.homogeneous = false;
      r.witnesses = std::make_pair(Polynomial::monomial(p.ring(), t0.first, t0.second),
                                   Polynomial::monomial(p.ring(), t.first, t.second));
      return r;
    }
  }
  return r;
}

}  // namespace hodge
