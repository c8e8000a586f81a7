#include "hodge/detail/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "hodge/errors.hpp"

namespace hodge::detail {

void Engine::canonicalize(Poly& p) const {
  std::sort(p.begin(), p.end(),
            [this](const Term& a, const Term& b) { return ord_.compare(a.m, b.m) > 0; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (w > 0 && p[w - 1].m == p[i].m) {
      p[w - 1].c += p[i].c;
    } else {
      if (w > 0 && p[w - 1].c == 0) --w;
      if (w != i) p[w] = std::move(p[i]);
      ++w;
    }
  }
  if (w > 0 && p[w - 1].c == 0) --w;
  p.resize(w);
}

bool Engine::expands(const Monomial& m, const Poly& g) const {
  for (auto [x, d] : alg_.pairs) {
    if (!m[d]) continue;
    for (const auto& t : g)
      if (t.m[x]) return true;
  }
  return false;
}

Poly Engine::mul_term(const Monomial& m, const Integer& c, const Poly& g) const {
  Poly out;
  if (c == 0) return out;
  if (alg_.is_commutative() || !expands(m, g)) {
    out.reserve(g.size());
    for (const auto& t : g) out.push_back({t.m * m, t.c * c});
    return out;
  }
  // d^b x^a = sum_k C(b,k) a!/(a-k)! x^(a-k) d^(b-k), pair by pair.
  const std::size_t np = alg_.pairs.size();
  std::vector<int> kmax(np), k(np);
  for (const auto& t : g) {
    bool trivial = true;
    for (std::size_t p = 0; p < np; ++p) {
      auto [x, d] = alg_.pairs[p];
      kmax[p] = std::min<int>(m[d], t.m[x]);
      if (kmax[p]) trivial = false;
    }
    Monomial base = t.m * m;
    if (trivial) {
      out.push_back({base, t.c * c});
      continue;
    }
    std::fill(k.begin(), k.end(), 0);
    for (;;) {
      Integer coef = t.c * c;
      Monomial mm = base;
      for (std::size_t p = 0; p < np; ++p) {
        if (!k[p]) continue;
        auto [x, d] = alg_.pairs[p];
        unsigned a = t.m[x];
        coef *= binomial(m[d], k[p]);
        for (int j = 0; j < k[p]; ++j) coef *= (a - j);
        mm[x] = static_cast<std::uint16_t>(mm[x] - k[p]);
        mm[d] = static_cast<std::uint16_t>(mm[d] - k[p]);
      }
      out.push_back({mm, std::move(coef)});
      std::size_t p = 0;
      while (p < np && k[p] == kmax[p]) k[p++] = 0;
      if (p == np) break;
      ++k[p];
    }
  }
  canonicalize(out);
  return out;
}

Poly Engine::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for (const auto& t : a) {
    Poly part = mul_term(t.m, t.c, b);
    for (auto& s : part) acc[s.m] += s.c;
  }
  Poly out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  canonicalize(out);
  return out;
}

Poly Engine::add(const Poly& a, const Poly& b) const { return combine(1, a, -1, b); }

Poly Engine::combine(const Integer& a, const Poly& p, const Integer& b, const Poly& q) const {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  const bool a_one = (a == 1);
  while (i < p.size() || j < q.size()) {
    int cmp;
    if (i == p.size()) cmp = -1;
    else if (j == q.size()) cmp = 1;
    else cmp = ord_.compare(p[i].m, q[j].m);
    if (cmp > 0) {
      out.push_back({p[i].m, a_one ? p[i].c : Integer(a * p[i].c)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({q[j].m, Integer(-b * q[j].c)});
      ++j;
    } else {
      Integer c = a * p[i].c - b * q[j].c;
      if (c != 0) out.push_back({p[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void Engine::make_primitive(Poly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

namespace {

struct Reducer {
  Monomial lm;
  std::uint32_t mask;
  std::size_t len;
  const Poly* poly;
};

std::vector<Reducer> make_reducers(const std::vector<Poly>& G) {
  std::vector<Reducer> rs;
  for (const auto& g : G)
    if (!g.empty()) rs.push_back({g.front().m, g.front().m.support_mask(), g.size(), &g});
  return rs;
}

const Reducer* find_reducer(const std::vector<Reducer>& rs, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  const Reducer* best = nullptr;
  for (const auto& r : rs) {
    if (r.mask & ~mask) continue;
    if (!r.lm.divides(m)) continue;
    if (!best || r.len < best->len) best = &r;
  }
  return best;
}

Integer content_of(const Poly& p, Integer g) {
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

Poly Engine::reduce(Poly p, const std::vector<Poly>& G, Rational* scale, bool full) const {
  auto rs = make_reducers(G);
  Poly done;
  Rational sc = 1;
  std::size_t steps = 0;
  // p holds the unreduced part; done holds irreducible terms already emitted.
  std::size_t head = 0;
  while (head < p.size()) {
    const Reducer* r = find_reducer(rs, p[head].m);
    if (!r) {
      if (!full) break;
      done.push_back(std::move(p[head]));
      ++head;
      continue;
    }
    if (head) {
      p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(head));
      head = 0;
    }
    const Term& lt = p.front();
    const Poly& g = *r->poly;
    Monomial q = lt.m / g.front().m;
    Integer d = gcd(lt.c, g.front().c);
    Integer a = g.front().c / d;
    Integer b = lt.c / d;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Poly qg = mul_term(q, 1, g);
    p = combine(a, p, b, qg);
    if (a != 1) {
      for (auto& t : done) t.c *= a;
      sc *= a;
    }
    if (++steps % 8 == 0) {
      Integer c = content_of(done, content_of(p, 0));
      if (c > 1) {
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        sc /= c;
      }
    }
  }
  for (std::size_t i = head; i < p.size(); ++i) done.push_back(std::move(p[i]));
  if (scale) *scale = sc;
  return done;
}

Poly Engine::spoly(const Poly& f, const Poly& g) const {
  Monomial L = Monomial::lcm(f.front().m, g.front().m);
  Integer d = gcd(f.front().c, g.front().c);
  Integer cf = g.front().c / d;
  Integer cg = f.front().c / d;
  Poly a = mul_term(L / f.front().m, cf, f);
  Poly b = mul_term(L / g.front().m, cg, g);
  return combine(1, a, 1, b);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

}  // namespace

std::vector<Poly> Engine::groebner(std::vector<Poly> gens, Stats* stats) const {
  const bool commutative = alg_.is_commutative();
  std::deque<Poly> polys;
  std::vector<int> sugar;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  Stats st;

  auto lm = [&](std::size_t i) -> const Monomial& { return polys[i].front().m; };

  auto update = [&](std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<Pair> C;
    for (std::size_t g : active) {
      Monomial L = Monomial::lcm(lh, lm(g));
      int s = std::max(sugar[h] + (L / lh).total_degree(), sugar[g] + (L / lm(g)).total_degree());
      C.push_back({g, h, L, s});
    }
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair& p = C[k];
      bool disjoint = commutative && lh.coprime(lm(p.i));
      bool keep = disjoint;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < C.size() && keep; ++l)
          if (C[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < D.size() && keep; ++l)
          if (D[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!(commutative && lh.coprime(lm(p.i)))) E.push_back(p);
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + E.size());
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && Monomial::lcm(lm(p.i), lh) != p.lcm &&
                  Monomial::lcm(lm(p.j), lh) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (auto& p : E) kept.push_back(p);
    pairs = std::move(kept);
    std::vector<std::size_t> na;
    for (std::size_t g : active)
      if (!lh.divides(lm(g))) na.push_back(g);
    na.push_back(h);
    active = std::move(na);
  };

  auto active_polys = [&]() {
    std::vector<Poly> v;
    v.reserve(active.size());
    for (auto i : active) v.push_back(polys[i]);
    return v;
  };

  auto check_degree = [&](const Poly& p) {
    if (budget_.max_degree > 0)
      for (const auto& t : p)
        if (t.m.total_degree() > budget_.max_degree)
          throw BudgetExceeded("Gröbner basis element exceeds degree cap " +
                               std::to_string(budget_.max_degree));
  };

  std::sort(gens.begin(), gens.end(), [this](const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    return ord_.compare(a.front().m, b.front().m) < 0;
  });
  std::vector<Poly> cache;
  for (auto& g : gens) {
    if (g.empty()) continue;
    canonicalize(g);
    cache = active_polys();
    Poly h = reduce(std::move(g), cache, nullptr, true);
    if (h.empty()) continue;
    make_primitive(h);
    int s = 0;
    for (const auto& t : h) s = std::max(s, t.m.total_degree());
    polys.push_back(std::move(h));
    sugar.push_back(s);
    update(polys.size() - 1);
  }

  bool dirty = true;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      bool better = commutative && a.sugar != b.sugar ? a.sugar < b.sugar : ord_.compare(a.lcm, b.lcm) < 0;
      if (better) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    ++st.reductions;
    if (budget_.max_steps && st.reductions > budget_.max_steps)
      throw BudgetExceeded("Gröbner basis step budget of " + std::to_string(budget_.max_steps) +
                           " S-pair reductions exhausted");
    Poly s = spoly(polys[p.i], polys[p.j]);
    if (dirty) {
      cache = active_polys();
      dirty = false;
    }
    Poly h = reduce(std::move(s), cache, nullptr, true);
    if (h.empty()) {
      ++st.zero_reductions;
      continue;
    }
    make_primitive(h);
    check_degree(h);
    polys.push_back(std::move(h));
    sugar.push_back(p.sugar);
    update(polys.size() - 1);
    dirty = true;
  }

  // Interreduce.
  std::vector<Poly> basis = active_polys();
  std::sort(basis.begin(), basis.end(), [this](const Poly& a, const Poly& b) {
    return ord_.compare(a.front().m, b.front().m) < 0;
  });
  std::vector<Poly> out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Poly> others;
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != k) others.push_back(basis[l]);
    Poly head{basis[k].front()};
    Poly tail(basis[k].begin() + 1, basis[k].end());
    Rational sc;
    Poly rt = reduce(std::move(tail), others, &sc, true);
    // head*sc.num/sc.den + rt/den  -> scale whole by den
    Integer num = sc.get_num(), den = sc.get_den();
    Poly full;
    full.push_back({head[0].m, head[0].c * num});
    for (auto& t : rt) full.push_back({t.m, t.c * den});
    make_primitive(full);
    out.push_back(std::move(full));
  }
  st.basis_size = out.size();
  if (stats) *stats = st;
  return out;
}

}  // namespace hodge::detail
