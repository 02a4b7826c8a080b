#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "ringforge/ideal.hpp"

using namespace ringforge;

namespace {

auto code_of = [](auto fn) -> std::optional<errc> {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
};

using Table = std::vector<std::vector<std::size_t>>;

GroupPtr make_s3() {
  const std::size_t n = 3;
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = (i + j) % n;
      t[i][n + j] = n + (i + j) % n;
      t[n + i][j] = n + (i + n - j) % n;
      t[n + i][n + j] = (i + n - j) % n;
    }
  return FiniteGroup::from_cayley_table(t, 0, {"e", "r", "r2", "s", "rs", "r2s"}, "s3");
}

// Independent oracle: every rref subspace (spans of all subsets of nonzero
// vectors) filtered by the ideal closure predicate. Only for tiny rings.
std::set<std::vector<scalar>> ideal_bases_by_subspace_scan(const RingPtr& r) {
  std::vector<std::vector<scalar>> nonzero;
  std::vector<scalar> v(r->dimension(), 0);
  while (next_vector(v, r->field.p)) nonzero.push_back(v);

  std::set<std::vector<scalar>> out;
  const std::size_t subsets = std::size_t{1} << nonzero.size();
  for (std::size_t pick = 0; pick < subsets; ++pick) {
    Matrix m(r->field, 0, r->dimension());
    for (std::size_t k = 0; k < nonzero.size(); ++k)
      if ((pick >> k) & 1) m.append_row(nonzero[k]);
    Matrix canon = rref(std::move(m));
    if (!is_ideal(r, canon, IdealSide::two_sided)) continue;
    std::vector<scalar> key = canon.a;
    key.push_back(static_cast<scalar>(canon.rows));
    out.insert(std::move(key));
  }
  return out;
}

std::set<std::vector<scalar>> keys_of(const std::vector<Ideal>& ideals) {
  std::set<std::vector<scalar>> out;
  for (const Ideal& i : ideals) {
    std::vector<scalar> key = i.basis.a;
    key.push_back(static_cast<scalar>(i.basis.rows));
    out.insert(std::move(key));
  }
  return out;
}

}  // namespace

TEST_CASE("zero and whole ideals") {
  RingPtr r = make_ring(2, preset_q8());
  Ideal z = zero_ideal(r);
  CHECK(z.dim() == 0);
  CHECK(z.is_zero_ideal());
  CHECK(z.two_sided());
  Ideal w = whole_ring_ideal(r);
  CHECK(w.dim() == 8);
  CHECK(ideal_contains(w, z));
  CHECK(!ideal_contains(z, w));
  CHECK(ideal_contains_element(w, parse_element(r, "e+a")));
  CHECK(!ideal_contains_element(z, ring_one(r)));
}

TEST_CASE("is_ideal") {
  RingPtr r = make_ring(2, preset_q8());
  // span{e} escapes under right multiplication by a
  Matrix span_e = Matrix::from_rows(r->field, 8, {{1, 0, 0, 0, 0, 0, 0, 0}});
  CHECK(!is_ideal(r, span_e, IdealSide::two_sided));
  CHECK(!is_ideal(r, span_e, IdealSide::left));
  Matrix span_sum = Matrix::from_rows(r->field, 8, {{1, 1, 1, 1, 1, 1, 1, 1}});
  CHECK(is_ideal(r, span_sum, IdealSide::two_sided));
  CHECK(code_of([&] { is_ideal(r, Matrix(r->field, 1, 3), IdealSide::left); }) ==
        errc::dimension_mismatch);
}

TEST_CASE("augmentation ideal dimension law") {
  // dim I(H) = |G| - [G:H] over both fields, for every subgroup
  for (unsigned p : {2u, 3u}) {
    RingPtr r = make_ring(p, preset_q8());
    std::multiset<std::size_t> dims;
    for (const Subgroup& h : subgroups(r->group)) {
      Ideal left = augmentation_ideal_basis(r, h, Side::left);
      Ideal right = augmentation_ideal_basis(r, h, Side::right);
      CHECK(left.dim() == 8 - 8 / h.order);
      CHECK(right.dim() == left.dim());
      // all subgroups of q8 are normal, so both constructions are two-sided
      CHECK(left.two_sided());
      CHECK(right.two_sided());
      CHECK(same_ideal(left, right));
      dims.insert(left.dim());
    }
    CHECK(dims == std::multiset<std::size_t>{0, 4, 6, 6, 6, 7});
  }
  RingPtr r = make_ring(2, preset_q8());
  CHECK(code_of([&] {
          augmentation_ideal_basis(r, trivial_subgroup(preset_cyclic(4)));
        }) == errc::not_a_subgroup);
}

TEST_CASE("non-normal subgroup gives a one-sided ideal") {
  GroupPtr s3 = make_s3();
  RingPtr r = make_ring(2, s3);
  Subgroup refl = closure_subgroup(s3, {3});
  Ideal left = augmentation_ideal_basis(r, refl, Side::left);
  CHECK(left.dim() == 3);
  CHECK(left.left_closed);
  CHECK(!left.right_closed);
  Ideal right = augmentation_ideal_basis(r, refl, Side::right);
  CHECK(right.dim() == 3);
  CHECK(right.right_closed);
  CHECK(!right.left_closed);
  CHECK(!same_ideal(left, right));
  // the normal subgroup of s3 still gives a two-sided ideal
  CHECK(augmentation_ideal_basis(r, closure_subgroup(s3, {1})).two_sided());
}

TEST_CASE("ideal_from_generators") {
  RingPtr r = make_ring(2, preset_q8());
  Ideal smallest = ideal_from_generators(r, {group_sum(r)}, IdealSide::two_sided);
  CHECK(smallest.dim() == 1);
  CHECK(smallest.basis.row(0) == std::vector<scalar>{1, 1, 1, 1, 1, 1, 1, 1});
  Ideal ia =
      ideal_from_generators(r, {parse_element(r, "(e+a)^3"), parse_element(r, "(e+a)^3*b")},
                            IdealSide::two_sided);
  CHECK(ia.dim() == 2);
  CHECK(ideal_from_generators(r, {ring_one(r)}, IdealSide::two_sided).dim() == 8);
  CHECK(ideal_from_generators(r, {}, IdealSide::two_sided).is_zero_ideal());
  RingPtr r3 = make_ring(3, preset_q8());
  CHECK(code_of([&] {
          ideal_from_generators(r, {ring_one(r3)}, IdealSide::left);
        }) == errc::ring_mismatch);

  // one-sided generation in Z2[s3]: left span of (e+s) is left- but not
  // right-closed
  RingPtr rs3 = make_ring(2, make_s3());
  RingElement gen = parse_element(rs3, "e+s");
  Ideal left = ideal_from_generators(rs3, {gen}, IdealSide::left);
  CHECK(left.left_closed);
  CHECK(!left.right_closed);
  Ideal two = ideal_from_generators(rs3, {gen}, IdealSide::two_sided);
  CHECK(two.two_sided());
  CHECK(ideal_contains(two, left));
}

TEST_CASE("named ideals of Z2[q8]") {
  RingPtr r = make_ring(2, preset_q8());
  NamedIdealsZ2Q8 named = named_ideals_z2q8(r);
  REQUIRE(named.ideals.size() == 13);
  const std::map<std::string, std::size_t> expected_dims = {
      {"I(Q8)", 7}, {"I(<a>)", 6}, {"I(<b>)", 6}, {"I(<ab>)", 6}, {"I(<a^2>)", 4},
      {"I_a", 2},   {"I_b", 2},    {"I_ab", 2},   {"I_{a+b}", 3}, {"M_a", 4},
      {"M_b", 4},   {"M_ab", 4},   {"M_{a+b}", 5}};
  for (const auto& [label, dim] : expected_dims) {
    INFO(label);
    REQUIRE(named.ideals.count(label) == 1);
    CHECK(named.ideals.at(label).dim() == dim);
    CHECK(named.ideals.at(label).two_sided());
  }
  CHECK(named.i_family_collapses);
  CHECK(named.m_family_collapses);
  CHECK(named.prune_identity_holds);
  // the M_a generator products land exactly on the subgroup ideal of <a^2>
  CHECK(same_ideal(named.ideals.at("M_a"), named.ideals.at("I(<a^2>)")));
  CHECK(!same_ideal(named.ideals.at("M_b"), named.ideals.at("M_ab")));
  CHECK(!same_ideal(named.ideals.at("M_a"), named.ideals.at("M_b")));
  // the generator-list construction agrees with the transversal construction
  CHECK(same_ideal(named.ideals.at("I(Q8)"),
                   augmentation_ideal_basis(r, whole_group(r->group))));
  CHECK(same_ideal(named.ideals.at("I(<a>)"),
                   augmentation_ideal_basis(r, closure_subgroup(r->group, {1}))));
  CHECK(same_ideal(named.ideals.at("I(<a^2>)"),
                   augmentation_ideal_basis(r, closure_subgroup(r->group, {2}))));
  // containment chain I_a < I_{a+b} < M_a < M_{a+b} < I(<a>) < I(Q8)
  CHECK(ideal_contains(named.ideals.at("I_{a+b}"), named.ideals.at("I_a")));
  CHECK(ideal_contains(named.ideals.at("M_a"), named.ideals.at("I_{a+b}")));
  CHECK(ideal_contains(named.ideals.at("M_{a+b}"), named.ideals.at("M_a")));
  CHECK(ideal_contains(named.ideals.at("I(<a>)"), named.ideals.at("M_{a+b}")));
  CHECK(ideal_contains(named.ideals.at("I(Q8)"), named.ideals.at("I(<a>)")));

  CHECK(code_of([] { named_ideals_z2q8(make_ring(3, preset_q8())); }) == errc::wrong_ring);
}

TEST_CASE("ideal arithmetic") {
  RingPtr r = make_ring(2, preset_q8());
  NamedIdealsZ2Q8 named = named_ideals_z2q8(r);
  Ideal sum = ideal_ops(named.ideals.at("I_a"), named.ideals.at("I_b"), IdealOp::sum);
  CHECK(same_ideal(sum, named.ideals.at("I_{a+b}")));
  CHECK(sum.dim() == 3);
  Ideal inter =
      ideal_ops(named.ideals.at("I(<a>)"), named.ideals.at("I(<a>)"), IdealOp::intersect);
  CHECK(same_ideal(inter, named.ideals.at("I(<a>)")));
  CHECK(ideal_ops(named.ideals.at("I_a"), named.ideals.at("I_b"), IdealOp::intersect).dim() ==
        1);  // both contain the socle line

  Ideal smallest = ideal_from_generators(r, {group_sum(r)}, IdealSide::two_sided);
  CHECK(ideal_ops(smallest, smallest, IdealOp::product).is_zero_ideal());

  // dimension law for ideal sums/intersections
  const auto& a = named.ideals.at("M_b");
  const auto& b = named.ideals.at("M_ab");
  CHECK(ideal_ops(a, b, IdealOp::sum).dim() + ideal_ops(a, b, IdealOp::intersect).dim() ==
        a.dim() + b.dim());

  RingPtr r3 = make_ring(3, preset_q8());
  CHECK(code_of([&] {
          ideal_ops(named.ideals.at("I_a"), whole_ring_ideal(r3), IdealOp::sum);
        }) == errc::ring_mismatch);

  // Statement-7 style product: I(<a^2>) times itself reproduces itself over Z3
  Ideal ia2 = augmentation_ideal_basis(r3, closure_subgroup(r3->group, {2}));
  CHECK(same_ideal(ideal_ops(ia2, ia2, IdealOp::product), ia2));
  Ideal one_sided = augmentation_ideal_basis(make_ring(2, make_s3()),
                                             closure_subgroup(make_s3(), {3}), Side::left);
  CHECK(code_of([&] { ideal_ops(one_sided, one_sided, IdealOp::product); }) ==
        errc::not_an_ideal);
}

TEST_CASE("all_ideals lattice") {
  RingPtr z2q8 = make_ring(2, preset_q8());
  std::vector<Ideal> lat = all_ideals(z2q8);
  CHECK(lat.size() == 15);
  std::multiset<std::size_t> dims;
  for (const Ideal& i : lat) {
    dims.insert(i.dim());
    CHECK(is_ideal(z2q8, i.basis, IdealSide::two_sided));
  }
  CHECK(dims == std::multiset<std::size_t>{0, 1, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8});
  CHECK(lat.front().is_zero_ideal());
  CHECK(lat.back().dim() == 8);

  // every named ideal appears verbatim
  NamedIdealsZ2Q8 named = named_ideals_z2q8(z2q8);
  auto lattice_keys = keys_of(lat);
  std::vector<Ideal> named_list;
  for (const auto& [label, ideal] : named.ideals) named_list.push_back(ideal);
  for (const auto& key : keys_of(named_list)) CHECK(lattice_keys.count(key) == 1);

  // closed under sum and intersection
  for (const Ideal& a : lat)
    for (const Ideal& b : lat) {
      std::vector<Ideal> s = {ideal_ops(a, b, IdealOp::sum)};
      std::vector<Ideal> i = {ideal_ops(a, b, IdealOp::intersect)};
      CHECK(lattice_keys.count(*keys_of(s).begin()) == 1);
      CHECK(lattice_keys.count(*keys_of(i).begin()) == 1);
    }

  CHECK(all_ideals(make_ring(3, preset("trivial"))).size() == 2);
  CHECK(all_ideals(make_ring(2, preset_cyclic(2))).size() == 3);
  CHECK(code_of([] { all_ideals(make_ring(2, preset_cyclic(4)), 2); }) == errc::too_large);
  CHECK(code_of([] { all_ideals(make_ring(17, preset_cyclic(8))); }) == errc::too_large);
}

TEST_CASE("all_ideals matches subspace-filter oracle on tiny rings") {
  for (auto [p, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {2, 4}, {3, 2}}) {
    RingPtr r = make_ring(p, preset_cyclic(n));
    INFO("p=" << p << " n=" << n);
    CHECK(keys_of(all_ideals(r)) == ideal_bases_by_subspace_scan(r));
  }
  CHECK(all_ideals(make_ring(2, preset_cyclic(4))).size() == 5);
  CHECK(all_ideals(make_ring(3, preset_cyclic(2))).size() == 4);
  CHECK(all_ideals(make_ring(3, preset_cyclic(4))).size() == 8);
}

TEST_CASE("hasse diagram") {
  RingPtr z2q8 = make_ring(2, preset_q8());
  HasseDiagram h = hasse_diagram(all_ideals(z2q8));
  CHECK(h.nodes.size() == 15);
  CHECK(h.edges.size() == 20);
  for (auto [lo, hi] : h.edges) {
    CHECK(h.nodes[lo].dim() < h.nodes[hi].dim());
    CHECK(ideal_contains(h.nodes[hi], h.nodes[lo]));
  }
  // unique atom: span of the all-ones vector covers {0} and nothing else does
  std::size_t atoms = 0, atom_index = 0;
  for (auto [lo, hi] : h.edges)
    if (h.nodes[lo].is_zero_ideal()) {
      ++atoms;
      atom_index = hi;
    }
  CHECK(atoms == 1);
  CHECK(h.nodes[atom_index].dim() == 1);
  CHECK(h.nodes[atom_index].basis.row(0) == std::vector<scalar>{1, 1, 1, 1, 1, 1, 1, 1});
  // unique top cover: the 7-dim ideal is the only one covered by the ring
  std::size_t tops = 0;
  for (auto [lo, hi] : h.edges)
    if (h.nodes[hi].dim() == 8) ++tops;
  CHECK(tops == 1);

  // Z3[q8]: the Boolean lattice on 5 blocks
  HasseDiagram h3 = hasse_diagram(all_ideals(make_ring(3, preset_q8())));
  CHECK(h3.nodes.size() == 32);
  CHECK(h3.edges.size() == 80);

  // chain ring: path graph
  HasseDiagram hc = hasse_diagram(all_ideals(make_ring(2, preset_cyclic(2))));
  CHECK(hc.nodes.size() == 3);
  REQUIRE(hc.edges.size() == 2);
  CHECK(hc.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(hc.edges[1] == std::pair<std::size_t, std::size_t>{1, 2});

  // duplicates are collapsed
  std::vector<Ideal> dup = {zero_ideal(z2q8), zero_ideal(z2q8), whole_ring_ideal(z2q8)};
  CHECK(hasse_diagram(dup).nodes.size() == 2);
}

TEST_CASE("minimal ideals") {
  RingPtr z2q8 = make_ring(2, preset_q8());
  Ideal smallest = ideal_from_generators(z2q8, {group_sum(z2q8)}, IdealSide::two_sided);
  CHECK(is_minimal_ideal(smallest));
  NamedIdealsZ2Q8 named = named_ideals_z2q8(z2q8);
  CHECK(!is_minimal_ideal(named.ideals.at("I(Q8)")));
  CHECK(!is_minimal_ideal(named.ideals.at("I_a")));  // contains the socle line

  RingPtr z3q8 = make_ring(3, preset_q8());
  Ideal ia2 = augmentation_ideal_basis(z3q8, closure_subgroup(z3q8->group, {2}));
  CHECK(is_minimal_ideal(ia2));
  CHECK(!is_minimal_ideal(whole_ring_ideal(z3q8)));
  CHECK(code_of([&] { is_minimal_ideal(zero_ideal(z3q8)); }) == errc::zero_ideal);

  // in the Z3 lattice the atoms are exactly the minimal ideals
  std::vector<Ideal> lat = all_ideals(z3q8);
  std::size_t minimal_count = 0;
  for (const Ideal& i : lat)
    if (!i.is_zero_ideal() && is_minimal_ideal(i)) ++minimal_count;
  CHECK(minimal_count == 5);
}
