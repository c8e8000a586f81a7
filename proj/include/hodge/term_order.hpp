#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodge/monomial.hpp"

namespace hodge {

// A monomial order given by integer weight rows compared in sequence, then a
// lex or degrevlex tiebreak. All weights are nonnegative, so every order is a
// well-order with 1 minimal.
class TermOrder {
 public:
  enum class Tiebreak { Lex, DegRevLex };

  TermOrder() = default;
  TermOrder(std::vector<std::vector<std::int64_t>> rows, Tiebreak tb);

  static TermOrder lex() { return TermOrder({}, Tiebreak::Lex); }
  static TermOrder degrevlex() { return TermOrder({}, Tiebreak::DegRevLex); }
  // Weight vector first, then degrevlex.
  static TermOrder weighted(std::vector<std::int64_t> w) {
    return TermOrder({std::move(w)}, Tiebreak::DegRevLex);
  }
  // Any monomial involving a variable with drop[i] beats every monomial free of them.
  static TermOrder block_elimination(const std::vector<bool>& drop);

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  Tiebreak tiebreak() const { return tb_; }
  std::string describe() const;

  // Weight of row r on monomial m.
  std::int64_t row_weight(std::size_t r, const Monomial& m) const;

  // Prepends a row; used to build refinements such as weight-then-order.
  TermOrder refined_by(std::vector<std::int64_t> first_row) const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.rows_ == b.rows_ && a.tb_ == b.tb_;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  Tiebreak tb_ = Tiebreak::DegRevLex;
};

}  // namespace hodge
