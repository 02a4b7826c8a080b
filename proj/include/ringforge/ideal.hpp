#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ringforge/group_ring.hpp"

namespace ringforge {

enum class IdealSide { left, right, two_sided };

// A subspace of the group ring closed under the requested module actions,
// stored as a canonical rref basis. Closure flags are verified at
// construction, never assumed.
struct Ideal {
  RingPtr ring;
  Matrix basis;  // rref, zero rows dropped
  bool left_closed = false;
  bool right_closed = false;
  std::string label;  // optional display name

  std::size_t dim() const { return basis.rows; }
  bool is_zero_ideal() const { return basis.rows == 0; }
  bool two_sided() const { return left_closed && right_closed; }
};

Ideal zero_ideal(const RingPtr& r);
Ideal whole_ring_ideal(const RingPtr& r);

bool same_ideal(const Ideal& a, const Ideal& b);
bool ideal_contains(const Ideal& outer, const Ideal& inner);
bool ideal_contains_element(const Ideal& i, const RingElement& x);

// True iff the row space of `space` is closed under the requested actions.
bool is_ideal(const RingPtr& r, const Matrix& space, IdealSide side);

// Basis {u*(h-e)} over the deterministic left transversal (or {(h-e)*u} over
// the right one). Dimension is always |G| - [G:H]; the result is two-sided
// exactly when the closure check says so (e.g. whenever H is normal).
Ideal augmentation_ideal_basis(const RingPtr& r, const Subgroup& h, Side side = Side::left);

// Smallest ideal of the requested sidedness containing all generators.
Ideal ideal_from_generators(const RingPtr& r, const std::vector<RingElement>& gens,
                            IdealSide side);

enum class IdealOp { sum, intersect, product };
Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOp op);

// Every two-sided ideal: principal ideals of all p^|G| elements, closed under
// pairwise sums. Sorted by (dimension, basis bytes). Guarded by max_order and
// an element-count bound of 20000.
std::vector<Ideal> all_ideals(const RingPtr& r, std::size_t max_order = 8);

struct HasseDiagram {
  std::vector<Ideal> nodes;  // sorted by (dimension, basis bytes)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (i,j): nodes[i] < nodes[j], cover
};

HasseDiagram hasse_diagram(std::vector<Ideal> ideals);

// True iff no two-sided ideal sits strictly between {0} and I: the principal
// ideal of every nonzero member of I is I itself.
bool is_minimal_ideal(const Ideal& i);

// The classical named ideals of Z2[q8], built from their explicit generator
// lists, with the equalities that collapse the combined families.
struct NamedIdealsZ2Q8 {
  std::map<std::string, Ideal> ideals;
  bool i_family_collapses = false;  // I_{a+b} == I_a+I_b == I_a+I_ab == I_b+I_ab
  bool m_family_collapses = false;  // M_{a+b} == M_a+M_b == M_a+M_ab == M_b+M_ab
  bool prune_identity_holds = false;  // (e+a)^3 + (e+a)^3*b == (e+b)^3 + (e+b)^3*a
};

NamedIdealsZ2Q8 named_ideals_z2q8(const RingPtr& r);

}  // namespace ringforge
