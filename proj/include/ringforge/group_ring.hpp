#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringforge/group.hpp"
#include "ringforge/matrix.hpp"

namespace ringforge {

// The group algebra Z_p[G]: vectors of length |G| indexed by group elements,
// multiplied by convolution.
struct GroupRing {
  PrimeField field;
  GroupPtr group;

  GroupRing(PrimeField f, GroupPtr g) : field(f), group(std::move(g)) {}
  std::size_t dimension() const { return group->order(); }
};

using RingPtr = std::shared_ptr<const GroupRing>;

RingPtr make_ring(unsigned p, GroupPtr group);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct RingElement {
  RingPtr ring;
  std::vector<scalar> coeffs;

  bool is_zero() const;
  bool operator==(const RingElement&) const;
};

RingElement ring_zero(const RingPtr& r);
RingElement ring_one(const RingPtr& r);
RingElement basis_element(const RingPtr& r, std::size_t g);
RingElement from_coeffs(const RingPtr& r, std::vector<scalar> coeffs);
// Sum of every group basis element (coefficient 1 on each).
RingElement group_sum(const RingPtr& r);

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
RingElement operator*(scalar c, const RingElement& x);
RingElement power(const RingElement& x, unsigned long long k);

// Coefficient permutations x -> g*x and x -> x*g.
RingElement left_translate(std::size_t g, const RingElement& x);
RingElement right_translate(const RingElement& x, std::size_t g);

// Ring-hom to Z_p sending every group element to 1.
scalar augmentation(const RingElement& x);

// Canonical text form: terms in basis order, "0" for zero, coefficient 1
// left implicit ("e + 2*a + a^2*b"). Output re-parses to the same element.
std::string to_string(const RingElement& x);

// Matrix of y -> x*y (resp. y -> y*x) on coefficient columns. Multiplicative:
// the left matrix of x*y is the product of the left matrices of x and y.
Matrix left_regular_matrix(const RingElement& x);
Matrix right_regular_matrix(const RingElement& x);

// expr   := term ('+' term)*
// term   := factor ('*' factor)*
// factor := primary ('^' nat)?
// primary:= nat | symbol | '(' expr ')'
// A nat is an integer multiple of the identity; a symbol is a group element
// name or alias ('-' starts an alias like "-e", never subtraction).
RingElement parse_element(const RingPtr& r, const std::string& text);

enum class ElementClass { zero, unit, zero_divisor };

struct ElementClassification {
  ElementClass cls = ElementClass::zero;
  scalar augmentation = 0;
  std::optional<RingElement> inverse;  // set for units
  std::optional<RingElement> witness;  // nonzero y with x*y = 0, for zero divisors
};

// Every nonzero element of a finite-dimensional algebra is a unit or a zero
// divisor, by rank of its left regular matrix.
ElementClassification classify_element(const RingElement& x);

struct UnitParityCensus {
  std::size_t total = 0;
  std::size_t zero = 0;
  std::size_t units = 0;
  std::size_t zero_divisors = 0;
  std::size_t augmentation_one = 0;
  bool units_are_exactly_augmentation_one = false;
};

// Exhaustive classification of the whole ring (guarded by p^|G| <= 100000).
UnitParityCensus unit_parity_census(const RingPtr& r);

struct PowerCensus {
  std::size_t total = 0;
  std::size_t matches = 0;
  bool all_match = false;
};

// Counts x with x^4 == augmentation(x) * identity, exhaustively.
PowerCensus fourth_power_census(const RingPtr& r);

}  // namespace ringforge
