#include "hodge/term_order.hpp"

#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

TermOrder::TermOrder(std::vector<std::vector<std::int64_t>> rows, Tiebreak tb)
    : rows_(std::move(rows)), tb_(tb) {
  for (auto& r : rows_) {
    if (r.size() > kMaxVars) throw InputError("weight row longer than the variable capacity");
    for (auto w : r)
      if (w < 0) throw InputError("term order weights must be nonnegative");
    r.resize(kMaxVars, 0);
  }
}

TermOrder TermOrder::block_elimination(const std::vector<bool>& drop) {
  std::vector<std::int64_t> w(drop.size(), 0);
  for (std::size_t i = 0; i < drop.size(); ++i) w[i] = drop[i] ? 1 : 0;
  return TermOrder({w}, Tiebreak::DegRevLex);
}

std::int64_t TermOrder::row_weight(std::size_t r, const Monomial& m) const {
  const auto& row = rows_[r];
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) s += row[i] * m.e[i];
  return s;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      wa += row[i] * a.e[i];
      wb += row[i] * b.e[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (tb_ == Tiebreak::Lex) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  int da = 0, db = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

TermOrder TermOrder::refined_by(std::vector<std::int64_t> first_row) const {
  std::vector<std::vector<std::int64_t>> rows;
  rows.push_back(std::move(first_row));
  for (const auto& r : rows_) rows.push_back(r);
  return TermOrder(std::move(rows), tb_);
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  if (rows_.empty()) return tb_ == Tiebreak::Lex ? "lex" : "degrevlex";
  os << "weights[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << ";";
    std::size_t last = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (rows_[r][i]) last = i + 1;
    for (std::size_t i = 0; i < last; ++i) os << (i ? "," : "") << rows_[r][i];
  }
  os << "]+" << (tb_ == Tiebreak::Lex ? "lex" : "degrevlex");
  return os.str();
}

}  // namespace hodge
