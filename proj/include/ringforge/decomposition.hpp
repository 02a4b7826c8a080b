#pragma once

#include <map>
#include <string>
#include <vector>

#include "ringforge/ideal.hpp"

namespace ringforge {

// Primes dividing the group order.
struct PrimeSet {
  std::vector<unsigned> primes;
  bool contains(unsigned p) const;
};

PrimeSet group_primes(const GroupPtr& g);

// rref basis of {x : x*g = g*x for all g}; its dimension is the number of
// conjugacy classes.
Matrix center_basis(const RingPtr& r);

// All x in the center with x*x = x, found exhaustively (bound p^dim <= 1e5),
// sorted by coefficient vector. Always contains 0 and the identity.
std::vector<RingElement> central_idempotents(const RingPtr& r);

// Direct-sum decomposition into the principal ideals of the primitive
// central idempotents.
struct Decomposition {
  RingPtr ring;
  std::vector<Ideal> summands;           // sorted by (dim, basis bytes)
  std::vector<RingElement> idempotents;  // idempotents[i] generates summands[i]
};

// Requires p not dividing |G|. Verifies all invariants before returning:
// orthogonal idempotents summing to 1, pairwise-annihilating summands whose
// dimensions sum to |G|.
Decomposition wedderburn_decompose(const RingPtr& r);

// Complement of a two-sided ideal by averaging a coordinate projection over
// the group: C = kernel of (1/|G|) sum_g L_g P L_{g^-1}. Requires p ∤ |G|.
Ideal maschke_complement(const RingPtr& r, const Ideal& b);

// The split A = {x : x*g = x for all g} + A*omega, with directness reported.
struct FixedPointSplit {
  Ideal fixed;        // right-translation-invariant elements
  Ideal omega_image;  // A * (augmentation ideal)
  bool direct = false;
  bool exhausts = false;
  std::optional<RingElement> overlap_witness;  // nonzero intersection member if not direct
};

FixedPointSplit fixed_point_split(const RingPtr& r);

// The explicit five-summand structure of Z3[q8]: verbatim generating vectors,
// the chain of complement splittings, agreement with wedderburn_decompose,
// minimality of the 4-dim block, and its self-reproduction identity.
struct Z3Q8DecompositionReport {
  std::map<std::string, Ideal> pieces;
  bool chain_ring = false;        // ring = C + I(Q8), direct
  bool chain_i_q8 = false;        // I(Q8) = B + I(<a>), direct
  bool chain_i_a = false;         // I(<a>) = D + I(<a^2>), direct
  bool chain_d = false;           // D = F3-summand-3 + F3-summand-4, direct
  bool matches_wedderburn = false;
  bool block_minimal = false;     // I(<a^2>) has no proper nonzero subideal
  bool omega_identity = false;    // span{v*(a^2 - e)} over I(<a^2>) reproduces it
  std::vector<std::size_t> summand_dims;  // sorted dimensions of the five summands
};

Z3Q8DecompositionReport z3q8_decomposition_report(const RingPtr& r);

}  // namespace ringforge
