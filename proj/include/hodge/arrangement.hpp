#pragma once

#include <vector>

#include "hodge/groebner.hpp"

namespace hodge {

inline constexpr std::size_t kMaxHyperplanes = 12;

// Central arrangement: pairwise non-proportional linear forms.
struct Arrangement {
  Ring ring;
  std::vector<Polynomial> forms;

  Polynomial product() const;
};

// Validates the forms; throws InputError on a non-linear, zero or repeated form.
Arrangement make_arrangement(const std::vector<Polynomial>& forms);

struct Flat {
  std::vector<std::size_t> hyperplanes;  // indices of the forms vanishing on F
  std::vector<Polynomial> span;          // basis of the linear forms vanishing on F
  int rank = 0;
  std::size_t multiplicity() const { return hyperplanes.size(); }
  Ideal ideal(const Ring& R) const { return Ideal(R, span); }
};

struct FlatLattice {
  std::vector<Flat> flats;  // rank >= 1, sorted by rank then hyperplane set
};

FlatLattice flats(const Arrangement& arr);
// ∩_F I_F^max(0, m_F - rank F) as a reduced Groebner basis under degrevlex.
Ideal mustata_multiplier_ideal(const Arrangement& arr);

}  // namespace hodge
