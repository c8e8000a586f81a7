#include "hodge/arrangement.hpp"

#include <algorithm>
#include <map>

namespace hodge {

namespace {

using Vec = std::vector<Rational>;

Vec coefficients(const Polynomial& l) {
  const std::size_t n = l.ring()->nvars();
  Vec v(n, Rational(0));
  for (const auto& [m, c] : l.terms()) {
    if (m.total_degree() != 1) throw InputError("not a linear form: " + l.to_string());
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) v[i] = c;
  }
  return v;
}

// Reduced row echelon form of the rows; returns the nonzero rows.
std::vector<Vec> echelon(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][col] == 0) continue;
      Rational c = rows[k][col];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] -= c * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  auto rows = basis;
  rows.push_back(v);
  return echelon(rows).size() == basis.size();
}

Polynomial form(const Ring& R, const Vec& v) {
  Polynomial p(R);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p += Polynomial::variable(R, i) * v[i];
  return p;
}

}  // namespace

Polynomial Arrangement::product() const {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& l : forms) p *= l;
  return p;
}

Arrangement make_arrangement(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw InputError("an arrangement needs at least one hyperplane");
  if (forms.size() > kMaxHyperplanes)
    throw InputError("at most " + std::to_string(kMaxHyperplanes) + " hyperplanes are supported");
  Arrangement a{forms.front().ring(), forms};
  std::vector<Vec> seen;
  for (const auto& l : forms) {
    if (!l.ring()->same_as(*a.ring)) throw InputError("forms live in different rings");
    Vec v = coefficients(l);
    if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; }))
      throw InputError("zero form");
    for (const auto& w : seen)
      if (in_span({w}, v)) throw InputError("proportional forms: " + l.to_string());
    seen.push_back(v);
  }
  return a;
}

FlatLattice flats(const Arrangement& arr) {
  const std::size_t m = arr.forms.size();
  if (m > kMaxHyperplanes) throw InputError("too many hyperplanes");
  std::vector<Vec> vecs;
  for (const auto& l : arr.forms) vecs.push_back(coefficients(l));
  std::map<std::vector<std::size_t>, Flat> found;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) rows.push_back(vecs[i]);
    auto basis = echelon(rows);
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < m; ++i)
      if (in_span(basis, vecs[i])) closure.push_back(i);
    if (found.count(closure)) continue;
    Flat F;
    F.hyperplanes = closure;
    F.rank = static_cast<int>(basis.size());
    for (const auto& b : basis) F.span.push_back(form(arr.ring, b));
    found.emplace(closure, std::move(F));
  }
  FlatLattice L;
  for (auto& [k, F] : found) L.flats.push_back(std::move(F));
  std::stable_sort(L.flats.begin(), L.flats.end(),
                   [](const Flat& a, const Flat& b) { return a.rank < b.rank; });
  return L;
}

Ideal mustata_multiplier_ideal(const Arrangement& arr) {
  const Ring& R = arr.ring;
  Ideal acc(R, {Polynomial::constant(R, 1)});
  for (const auto& F : flats(arr).flats) {
    long e = static_cast<long>(F.multiplicity()) - F.rank;
    if (e <= 0) continue;
    acc = intersect(acc, ideal_power(F.ideal(R), static_cast<unsigned>(e)));
  }
  return Ideal(R, buchberger(acc).basis());
}

}  // namespace hodge
