#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringforge/error.hpp"

namespace ringforge {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultGroupBound = 64;

// A finite group given by its full Cayley table. Elements are the indices
// 0..n-1. Construction validates every axiom exhaustively — closure, the
// claimed identity, associativity over all n^3 triples, and two-sided
// inverses — and throws `error` naming the first violated axiom with a
// witness, so a FiniteGroup that exists is a group.
class FiniteGroup {
public:
  static GroupPtr from_cayley_table(const std::vector<std::vector<std::size_t>>& table,
                                    std::size_t identity,
                                    std::vector<std::string> names = {},
                                    std::string group_name = "custom",
                                    std::map<std::string, std::size_t> aliases = {});

  std::size_t order() const { return n_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  std::size_t power(std::size_t g, long long k) const;
  std::size_t element_order(std::size_t g) const;
  std::size_t conjugate(std::size_t g, std::size_t by) const;  // by * g * by^-1

  const std::string& name(std::size_t g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& group_name() const { return group_name_; }
  const std::map<std::string, std::size_t>& aliases() const { return aliases_; }
  // exact element name first, then alias
  std::optional<std::size_t> index_of(std::string_view name_or_alias) const;

  bool is_abelian() const;
  // same order, identity and multiplication table (names ignored)
  bool same_structure(const FiniteGroup& other) const;

private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;  // row-major n*n
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> aliases_;
  std::string group_name_;
};

// Built-in groups: "q8", "c_<n>" (or "c<n>"), "klein4", "trivial".
GroupPtr preset(const std::string& name);
GroupPtr preset_q8();
GroupPtr preset_cyclic(std::size_t n);
GroupPtr preset_klein4();

// A subgroup is a member bitmask over the parent's element indices
// (parent order <= 64).
struct Subgroup {
  GroupPtr parent;
  std::uint64_t mask = 0;
  std::size_t order = 0;

  bool contains(std::size_t g) const { return (mask >> g) & 1; }
  std::vector<std::size_t> members() const;
  std::string describe() const;  // "{e, a^2}"
};

bool same_subgroup(const Subgroup& a, const Subgroup& b);
bool subgroup_subset(const Subgroup& inner, const Subgroup& outer);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
// Multiplicative closure of the given elements (a subgroup, since the group
// is finite).
Subgroup closure_subgroup(const GroupPtr& g, const std::vector<std::size_t>& gens);
// Validates that the mask is closed under multiplication; NotASubgroup else.
Subgroup subgroup_from_mask(const GroupPtr& g, std::uint64_t mask);

// All subgroups, found by closing generator sets element by element.
// Sorted by (order, mask). GroupTooLarge above the bound.
std::vector<Subgroup> subgroups(const GroupPtr& g, std::size_t max_order = kDefaultGroupBound);

struct SubgroupProperties {
  bool abelian = false;
  bool cyclic = false;
  bool normal = false;
  std::optional<std::size_t> cyclic_generator;  // least generator when cyclic
  std::vector<std::size_t> generators;          // greedy minimal generating set
};
SubgroupProperties subgroup_properties(const Subgroup& h);

Subgroup center(const GroupPtr& g);

// Subgroup generated by all commutators [a,b] = a^-1 b^-1 a b, a in A, b in B.
Subgroup mutual_commutator(const Subgroup& a, const Subgroup& b);

enum class SeriesKind { central, solvable };

struct SeriesLink {
  std::size_t from = 0;  // chain indices
  std::size_t to = 0;
  bool ok = false;
  std::string detail;
};

struct SeriesReport {
  SeriesKind kind = SeriesKind::central;
  std::vector<SeriesLink> links;
  bool passed = false;
};

// Checks a descending chain G = A_0 >= A_1 >= ... >= A_m = {e}.
// NotAChain if the endpoints or containments are wrong, NotInvariant if some
// term is not normal in G. central: [A_t, G] <= A_{t+1} per link.
// solvable: each factor A_t / A_{t+1} is abelian (via quotient_group).
SeriesReport series_check(const std::vector<Subgroup>& chain, SeriesKind kind);

struct GroupClassification {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent
  bool solvable = false;
  std::size_t derived_length = 0;  // meaningful when solvable
  bool metabelian = false;
  bool central_quotient_abelian = false;
  bool commutator_in_center = false;
  bool center_criterion_agrees = false;  // the two lines above coincide
  std::vector<Subgroup> lower_central_series;
  std::vector<Subgroup> derived_series;
};
GroupClassification classify_group(const GroupPtr& g,
                                   std::size_t max_order = kDefaultGroupBound);

enum class Side { left, right };

// Coset representatives: the identity represents its own coset, every other
// coset is represented by its least element index id; listed identity-first,
// then ascending.
struct Transversal {
  GroupPtr group;
  Subgroup subgroup;
  Side side = Side::left;
  std::vector<std::size_t> representatives;
};
Transversal coset_transversal(const GroupPtr& g, const Subgroup& h, Side side);

// G/H for normal H (NotNormal otherwise); element k is the coset of the k-th
// left transversal representative, named "[rep]".
GroupPtr quotient_group(const GroupPtr& g, const Subgroup& h);

// The subgroup as a group in its own right; local index i is the i-th member
// in ascending parent order.
GroupPtr subgroup_as_group(const Subgroup& h);

// A generator pair (x, y) with x^4 = e, x^2 = y^2, xyx = y generating the
// whole group, plus the resulting normal form g = x^i y^j. NotQ8 when no
// such pair exists (or the order is not 8).
struct Q8Structure {
  std::size_t gen_a = 0;
  std::size_t gen_b = 0;
  // normal_form[g] = (i, j) with g = x^i y^j, i in 0..3, j in 0..1
  std::vector<std::pair<unsigned, unsigned>> normal_form;
};
Q8Structure q8_structure(const GroupPtr& g);

}  // namespace ringforge
