#include "ringforge/ideal.hpp"

#include <algorithm>
#include <set>

namespace ringforge {

namespace {

constexpr std::size_t kEnumerationBound = 20000;

void require_cols(const RingPtr& r, const Matrix& space) {
  if (space.cols != r->dimension())
    raise(errc::dimension_mismatch, "basis width does not match group order");
  if (space.field != r->field) raise(errc::ring_mismatch, "basis field does not match ring");
}

Ideal make_ideal(const RingPtr& r, Matrix space, std::string label = {}) {
  Ideal i;
  i.ring = r;
  i.basis = rref(std::move(space));
  i.left_closed = is_ideal(r, i.basis, IdealSide::left);
  i.right_closed = is_ideal(r, i.basis, IdealSide::right);
  i.label = std::move(label);
  return i;
}

RingElement row_element(const Ideal& i, std::size_t row) {
  return from_coeffs(i.ring, i.basis.row(row));
}

// All coefficient rows of the two-sided (or one-sided) span of x.
std::vector<std::vector<scalar>> translate_rows(const RingElement& x, IdealSide side) {
  const std::size_t n = x.ring->dimension();
  std::vector<std::vector<scalar>> rows;
  switch (side) {
    case IdealSide::left:
      for (std::size_t g = 0; g < n; ++g) rows.push_back(left_translate(g, x).coeffs);
      break;
    case IdealSide::right:
      for (std::size_t g = 0; g < n; ++g) rows.push_back(right_translate(x, g).coeffs);
      break;
    case IdealSide::two_sided:
      for (std::size_t g = 0; g < n; ++g) {
        const RingElement gx = left_translate(g, x);
        for (std::size_t h = 0; h < n; ++h) rows.push_back(right_translate(gx, h).coeffs);
      }
      break;
  }
  return rows;
}

Matrix principal_basis(const RingElement& x) {
  return rref(Matrix::from_rows(x.ring->field, x.ring->dimension(),
                                translate_rows(x, IdealSide::two_sided)));
}

std::size_t checked_pow(unsigned p, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    total *= p;
    if (total > kEnumerationBound)
      raise(errc::too_large, "enumeration would exceed " + std::to_string(kEnumerationBound) +
                                 " elements");
  }
  return total;
}

bool basis_less(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) return a.rows < b.rows;
  return a.a < b.a;
}

}  // namespace

Ideal zero_ideal(const RingPtr& r) {
  Ideal i;
  i.ring = r;
  i.basis = Matrix(r->field, 0, r->dimension());
  i.left_closed = true;
  i.right_closed = true;
  return i;
}

Ideal whole_ring_ideal(const RingPtr& r) {
  Ideal i;
  i.ring = r;
  i.basis = Matrix::identity(r->field, r->dimension());
  i.left_closed = true;
  i.right_closed = true;
  return i;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return same_ring(a.ring, b.ring) && a.basis == b.basis;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  if (!same_ring(outer.ring, inner.ring)) raise(errc::ring_mismatch, "ideals in different rings");
  for (std::size_t row = 0; row < inner.basis.rows; ++row)
    if (!membership(outer.basis, inner.basis.row(row))) return false;
  return true;
}

bool ideal_contains_element(const Ideal& i, const RingElement& x) {
  if (!same_ring(i.ring, x.ring)) raise(errc::ring_mismatch, "element in a different ring");
  return membership(i.basis, x.coeffs);
}

bool is_ideal(const RingPtr& r, const Matrix& space, IdealSide side) {
  require_cols(r, space);
  const Matrix canon = rref(space);
  const bool check_left = side != IdealSide::right;
  const bool check_right = side != IdealSide::left;
  for (std::size_t row = 0; row < canon.rows; ++row) {
    const RingElement x = from_coeffs(r, canon.row(row));
    for (std::size_t g = 0; g < r->dimension(); ++g) {
      if (check_left && !membership(canon, left_translate(g, x).coeffs)) return false;
      if (check_right && !membership(canon, right_translate(x, g).coeffs)) return false;
    }
  }
  return true;
}

Ideal augmentation_ideal_basis(const RingPtr& r, const Subgroup& h, Side side) {
  if (!h.parent || !h.parent->same_structure(*r->group))
    raise(errc::not_a_subgroup, "subgroup belongs to a different group");
  const Transversal t = coset_transversal(r->group, h, side);
  Matrix rows(r->field, 0, r->dimension());
  for (std::size_t u : t.representatives)
    for (std::size_t hm : h.members()) {
      if (hm == r->group->identity()) continue;
      std::vector<scalar> v(r->dimension(), 0);
      const std::size_t prod =
          side == Side::left ? r->group->mul(u, hm) : r->group->mul(hm, u);
      v[prod] = r->field.add(v[prod], 1);
      v[u] = r->field.sub(v[u], 1);
      rows.append_row(v);
    }
  return make_ideal(r, std::move(rows));
}

Ideal ideal_from_generators(const RingPtr& r, const std::vector<RingElement>& gens,
                            IdealSide side) {
  Matrix rows(r->field, 0, r->dimension());
  for (const RingElement& x : gens) {
    if (!same_ring(r, x.ring)) raise(errc::ring_mismatch, "generator in a different ring");
    for (auto& row : translate_rows(x, side)) rows.append_row(row);
  }
  return make_ideal(r, std::move(rows));
}

Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOp op) {
  if (!same_ring(a.ring, b.ring)) raise(errc::ring_mismatch, "ideals in different rings");
  switch (op) {
    case IdealOp::sum:
      return make_ideal(a.ring, combine(a.basis, b.basis, SpanOp::sum));
    case IdealOp::intersect:
      return make_ideal(a.ring, combine(a.basis, b.basis, SpanOp::intersection));
    case IdealOp::product: {
      if (!a.two_sided() || !b.two_sided())
        raise(errc::not_an_ideal, "product requires two-sided ideals");
      std::vector<RingElement> products;
      for (std::size_t i = 0; i < a.basis.rows; ++i)
        for (std::size_t j = 0; j < b.basis.rows; ++j)
          products.push_back(row_element(a, i) * row_element(b, j));
      return ideal_from_generators(a.ring, products, IdealSide::two_sided);
    }
  }
  raise(errc::not_an_ideal, "unknown ideal operation");
}

std::vector<Ideal> all_ideals(const RingPtr& r, std::size_t max_order) {
  if (r->dimension() > max_order)
    raise(errc::too_large, "group order " + std::to_string(r->dimension()) +
                               " exceeds the enumeration bound " + std::to_string(max_order));
  checked_pow(r->field.p, r->dimension());

  std::set<std::vector<scalar>> seen;
  std::vector<Matrix> bases;
  auto add = [&](const Matrix& m) {
    std::vector<scalar> key = m.a;
    key.push_back(static_cast<scalar>(m.rows));
    if (seen.insert(std::move(key)).second) bases.push_back(m);
  };

  std::vector<scalar> v(r->dimension(), 0);
  do {
    add(principal_basis(RingElement{r, v}));
  } while (next_vector(v, r->field.p));

  // close under pairwise sums; every ideal is a sum of principal ideals
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(rref(combine(bases[i], bases[j], SpanOp::sum)));

  std::sort(bases.begin(), bases.end(), basis_less);
  std::vector<Ideal> out;
  for (Matrix& m : bases) {
    Ideal i;
    i.ring = r;
    i.basis = std::move(m);
    i.left_closed = true;
    i.right_closed = true;
    out.push_back(std::move(i));
  }
  return out;
}

HasseDiagram hasse_diagram(std::vector<Ideal> ideals) {
  HasseDiagram d;
  std::set<std::vector<scalar>> seen;
  for (Ideal& i : ideals) {
    std::vector<scalar> key = i.basis.a;
    key.push_back(static_cast<scalar>(i.basis.rows));
    if (seen.insert(std::move(key)).second) d.nodes.push_back(std::move(i));
  }
  std::sort(d.nodes.begin(), d.nodes.end(),
            [](const Ideal& a, const Ideal& b) { return basis_less(a.basis, b.basis); });

  const std::size_t n = d.nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d.nodes[i].dim() < d.nodes[j].dim())
        below[i][j] = ideal_contains(d.nodes[j], d.nodes[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool is_cover = true;
      for (std::size_t k = 0; k < n && is_cover; ++k)
        if (below[i][k] && below[k][j]) is_cover = false;
      if (is_cover) d.edges.emplace_back(i, j);
    }
  return d;
}

bool is_minimal_ideal(const Ideal& i) {
  if (i.is_zero_ideal()) raise(errc::zero_ideal, "minimality is about nonzero ideals");
  checked_pow(i.ring->field.p, i.dim());
  std::vector<scalar> c(i.dim(), 0);
  const PrimeField& f = i.ring->field;
  while (next_vector(c, f.p)) {
    RingElement x = ring_zero(i.ring);
    for (std::size_t row = 0; row < i.dim(); ++row)
      if (c[row] != 0) x = x + c[row] * row_element(i, row);
    if (principal_basis(x) != i.basis) return false;
  }
  return true;
}

NamedIdealsZ2Q8 named_ideals_z2q8(const RingPtr& r) {
  if (r->field.p != 2 || !r->group->same_structure(*preset_q8()))
    raise(errc::wrong_ring, "named ideal inventory is specific to Z2[q8]");

  auto from = [&](std::string label, const std::vector<std::string>& exprs) {
    std::vector<RingElement> gens;
    for (const std::string& s : exprs) gens.push_back(parse_element(r, s));
    Ideal i = ideal_from_generators(r, gens, IdealSide::two_sided);
    i.label = label;
    return std::pair<std::string, Ideal>(std::move(label), std::move(i));
  };

  NamedIdealsZ2Q8 out;
  out.ideals.insert(from(
      "I(Q8)", {"e+a", "e+a^2", "e+a^3", "e+b", "e+a*b", "e+a^2*b", "e+a^3*b"}));
  out.ideals.insert(from(
      "I(<a>)", {"e+a", "e+a^2", "e+a^3", "(e+a)*b", "(e+a^2)*b", "(e+a)^3*b"}));
  auto label_subgroup = [&](std::string label, std::size_t gen) {
    Ideal i = augmentation_ideal_basis(r, closure_subgroup(r->group, {gen}));
    i.label = label;
    return std::pair<std::string, Ideal>(std::move(label), std::move(i));
  };
  out.ideals.insert(label_subgroup("I(<b>)", 4));
  out.ideals.insert(label_subgroup("I(<ab>)", 5));
  out.ideals.insert(from(
      "I(<a^2>)", {"e+a^2", "(e+a^2)*b", "(e+a^2)*a*b", "(e+a^2)*a"}));
  out.ideals.insert(from("I_a", {"(e+a)^3", "(e+a)^3*b"}));
  out.ideals.insert(from("I_b", {"(e+b)^3", "(e+b)^3*a"}));
  out.ideals.insert(from("I_ab", {"(e+a*b)^3", "(e+a*b)^3*a"}));
  out.ideals.insert(from("I_{a+b}", {"(e+a)^3", "(e+a)^3*b", "(e+b)^3"}));
  out.ideals.insert(from(
      "M_a", {"(e+a)*(e+a)", "(e+a)^2*a", "(e+b)^2*b", "(e+b)^2*a*b"}));
  out.ideals.insert(from(
      "M_b", {"(e+a)*(e+b)", "(e+a)*(e+b)*a", "(e+a)*(e+b)*b", "(e+a)*(e+b)*a*b"}));
  out.ideals.insert(from(
      "M_ab", {"(e+a)*(e+a*b)", "(e+a)*(e+a*b)*a", "(e+a)*(e+a*b)*b", "(e+a)*(e+a*b)*a*b"}));
  out.ideals.insert(from(
      "M_{a+b}", {"(e+a)^2", "(e+a)^2*a", "(e+b)^2*b", "(e+b)^2*a*b", "(e+a)*(e+b)"}));

  auto sum = [&](const char* x, const char* y) {
    return ideal_ops(out.ideals.at(x), out.ideals.at(y), IdealOp::sum);
  };
  const Ideal& i_ab_sum = out.ideals.at("I_{a+b}");
  out.i_family_collapses = same_ideal(i_ab_sum, sum("I_a", "I_b")) &&
                           same_ideal(i_ab_sum, sum("I_a", "I_ab")) &&
                           same_ideal(i_ab_sum, sum("I_b", "I_ab"));
  const Ideal& m_ab_sum = out.ideals.at("M_{a+b}");
  out.m_family_collapses = same_ideal(m_ab_sum, sum("M_a", "M_b")) &&
                           same_ideal(m_ab_sum, sum("M_a", "M_ab")) &&
                           same_ideal(m_ab_sum, sum("M_b", "M_ab"));
  out.prune_identity_holds =
      parse_element(r, "(e+a)^3 + (e+a)^3*b") == parse_element(r, "(e+b)^3 + (e+b)^3*a");
  return out;
}

}  // namespace ringforge
