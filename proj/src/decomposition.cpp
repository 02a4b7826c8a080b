#include "ringforge/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringforge {

namespace {

constexpr std::size_t kIdempotentBound = 100000;

void require_semisimple(const RingPtr& r) {
  if (group_primes(r->group).contains(r->field.p))
    raise(errc::char_divides_order, "characteristic " + std::to_string(r->field.p) +
                                        " divides the group order " +
                                        std::to_string(r->dimension()));
}

Matrix stacked_kernel_basis(const RingPtr& r, bool left_minus_right) {
  // kernel of the stack of (L_g - R_g) for the center, or (R_g - Id) for the
  // fixed-point space
  const std::size_t n = r->dimension();
  Matrix stackmat(r->field, 0, n);
  const Matrix id = Matrix::identity(r->field, n);
  for (std::size_t g = 0; g < n; ++g) {
    const RingElement eg = basis_element(r, g);
    const Matrix rg = right_regular_matrix(eg);
    const Matrix other = left_minus_right ? left_regular_matrix(eg) : id;
    Matrix diff(r->field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diff.at(i, j) = r->field.sub(rg.at(i, j), other.at(i, j));
    stackmat = stack(stackmat, diff);
  }
  return kernel(stackmat);
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("decomposition invariant failed: ") + what);
}

bool direct_split(const Ideal& whole, const Ideal& x, const Ideal& y) {
  return ideal_ops(x, y, IdealOp::intersect).is_zero_ideal() &&
         same_ideal(ideal_ops(x, y, IdealOp::sum), whole);
}

}  // namespace

bool PrimeSet::contains(unsigned p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

PrimeSet group_primes(const GroupPtr& g) {
  PrimeSet out;
  std::size_t n = g->order();
  for (unsigned d = 2; static_cast<std::size_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      out.primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.primes.push_back(static_cast<unsigned>(n));
  return out;
}

Matrix center_basis(const RingPtr& r) { return stacked_kernel_basis(r, true); }

std::vector<RingElement> central_idempotents(const RingPtr& r) {
  const Matrix z = center_basis(r);
  std::size_t count = 1;
  for (std::size_t k = 0; k < z.rows; ++k) {
    count *= r->field.p;
    if (count > kIdempotentBound)
      raise(errc::too_large, "center is too large for exhaustive idempotent search");
  }
  std::vector<RingElement> out;
  std::vector<scalar> c(z.rows, 0);
  do {
    RingElement x = ring_zero(r);
    for (std::size_t k = 0; k < z.rows; ++k)
      if (c[k] != 0) x = x + c[k] * from_coeffs(r, z.row(k));
    if (x * x == x) out.push_back(std::move(x));
  } while (next_vector(c, r->field.p));
  std::sort(out.begin(), out.end(),
            [](const RingElement& a, const RingElement& b) { return a.coeffs < b.coeffs; });
  return out;
}

Decomposition wedderburn_decompose(const RingPtr& r) {
  require_semisimple(r);
  const std::vector<RingElement> idems = central_idempotents(r);

  std::vector<RingElement> primitive;
  for (const RingElement& e : idems) {
    if (e.is_zero()) continue;
    bool minimal = true;
    for (const RingElement& f : idems) {
      if (f.is_zero() || f == e) continue;
      if (f * e == f) {  // f sits strictly below e
        minimal = false;
        break;
      }
    }
    if (minimal) primitive.push_back(e);
  }

  Decomposition d;
  d.ring = r;
  for (const RingElement& e : primitive) {
    Ideal summand = ideal_from_generators(r, {e}, IdealSide::two_sided);
    d.summands.push_back(std::move(summand));
    d.idempotents.push_back(e);
  }
  std::vector<std::size_t> order(primitive.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (d.summands[i].dim() != d.summands[j].dim())
      return d.summands[i].dim() < d.summands[j].dim();
    return d.summands[i].basis.a < d.summands[j].basis.a;
  });
  Decomposition sorted;
  sorted.ring = r;
  for (std::size_t i : order) {
    sorted.summands.push_back(std::move(d.summands[i]));
    sorted.idempotents.push_back(std::move(d.idempotents[i]));
  }

  // verify every claimed invariant
  std::size_t dim_total = 0;
  RingElement idem_sum = ring_zero(r);
  for (std::size_t i = 0; i < sorted.summands.size(); ++i) {
    const RingElement& e = sorted.idempotents[i];
    check(e * e == e, "idempotent is not idempotent");
    check(sorted.summands[i].two_sided(), "summand is not two-sided");
    check(same_ideal(sorted.summands[i], ideal_from_generators(r, {e}, IdealSide::two_sided)),
          "summand is not the principal ideal of its idempotent");
    dim_total += sorted.summands[i].dim();
    idem_sum = idem_sum + e;
    for (std::size_t j = 0; j < i; ++j) {
      check((sorted.idempotents[j] * e).is_zero(), "idempotents are not orthogonal");
      check((e * sorted.idempotents[j]).is_zero(), "idempotents are not orthogonal");
      check(ideal_ops(sorted.summands[i], sorted.summands[j], IdealOp::intersect)
                .is_zero_ideal(),
            "summands overlap");
      check(ideal_ops(sorted.summands[i], sorted.summands[j], IdealOp::product)
                .is_zero_ideal(),
            "summands do not annihilate");
    }
  }
  check(dim_total == r->dimension(), "summand dimensions do not sum to the ring dimension");
  check(idem_sum == ring_one(r), "idempotents do not sum to the identity");
  return sorted;
}

Ideal maschke_complement(const RingPtr& r, const Ideal& b) {
  require_semisimple(r);
  if (!same_ring(r, b.ring)) raise(errc::ring_mismatch, "ideal lives in a different ring");
  if (!b.two_sided()) raise(errc::not_an_ideal, "complement requires a two-sided ideal");

  const std::size_t n = r->dimension();
  const PrimeField& f = r->field;

  // coordinate projection onto b: x -> sum_i x[pivot_i] * basisrow_i, which
  // fixes b pointwise because rref rows are unit on their own pivots
  Matrix p0(f, n, n);
  for (std::size_t row = 0; row < b.basis.rows; ++row) {
    std::size_t pivot = 0;
    while (pivot < n && b.basis.at(row, pivot) == 0) ++pivot;
    for (std::size_t j = 0; j < n; ++j) p0.at(j, pivot) = b.basis.at(row, j);
  }

  // averaged projector (1/|G|) sum_g L_g P0 L_{g^-1}; L_g is the coefficient
  // permutation u -> g*u, so conjugation permutes both indices of P0
  Matrix acc(f, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t pr = r->group->mul(g, row);
        const std::size_t pc = r->group->mul(g, col);
        acc.at(pr, pc) = f.add(acc.at(pr, pc), p0.at(row, col));
      }
  }
  const scalar inv_n = f.inv(f.reduce(static_cast<scalar>(n)));
  for (scalar& x : acc.a) x = f.mul(x, inv_n);

  Ideal c;
  c.ring = r;
  c.basis = kernel(acc);
  c.left_closed = is_ideal(r, c.basis, IdealSide::left);
  c.right_closed = is_ideal(r, c.basis, IdealSide::right);
  if (!c.two_sided()) raise(errc::not_an_ideal, "averaged kernel failed the closure check");
  check(ideal_ops(b, c, IdealOp::intersect).is_zero_ideal(), "complement meets the ideal");
  check(b.dim() + c.dim() == n, "complement dimension is wrong");
  return c;
}

FixedPointSplit fixed_point_split(const RingPtr& r) {
  FixedPointSplit s;
  s.fixed.ring = r;
  s.fixed.basis = stacked_kernel_basis(r, false);
  s.fixed.left_closed = is_ideal(r, s.fixed.basis, IdealSide::left);
  s.fixed.right_closed = is_ideal(r, s.fixed.basis, IdealSide::right);

  const Ideal omega = augmentation_ideal_basis(r, whole_group(r->group));
  s.omega_image = ideal_ops(whole_ring_ideal(r), omega, IdealOp::product);

  const Ideal overlap = ideal_ops(s.fixed, s.omega_image, IdealOp::intersect);
  s.direct = overlap.is_zero_ideal();
  if (!s.direct) s.overlap_witness = from_coeffs(r, overlap.basis.row(0));
  s.exhausts =
      same_ideal(ideal_ops(s.fixed, s.omega_image, IdealOp::sum), whole_ring_ideal(r));
  return s;
}

Z3Q8DecompositionReport z3q8_decomposition_report(const RingPtr& r) {
  if (r->field.p != 3 || !r->group->same_structure(*preset_q8()))
    raise(errc::wrong_ring, "this report is specific to Z3[q8]");

  auto from_rows = [&](std::string label, const std::vector<std::vector<scalar>>& rows) {
    Ideal i;
    i.ring = r;
    i.basis = rref(Matrix::from_rows(r->field, 8, rows));
    i.left_closed = is_ideal(r, i.basis, IdealSide::left);
    i.right_closed = is_ideal(r, i.basis, IdealSide::right);
    i.label = std::move(label);
    return i;
  };
  auto from_exprs = [&](std::string label, const std::vector<std::string>& exprs) {
    std::vector<std::vector<scalar>> rows;
    for (const std::string& s : exprs) rows.push_back(parse_element(r, s).coeffs);
    return from_rows(std::move(label), rows);
  };

  Z3Q8DecompositionReport rep;
  auto put = [&](Ideal i) { rep.pieces.emplace(i.label, std::move(i)); };
  put(from_rows("C", {{1, 1, 1, 1, 1, 1, 1, 1}}));
  put(from_rows("B", {{1, 1, 1, 1, 2, 2, 2, 2}}));
  put(from_rows("F3-summand-3", {{1, 2, 1, 2, 1, 2, 1, 2}}));
  put(from_rows("F3-summand-4", {{1, 2, 1, 2, 2, 1, 2, 1}}));
  put(from_rows("D", {{1, 2, 1, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 2, 1, 2}}));
  put(from_exprs("I(Q8)", {"2*e+a", "2*e+a^2", "2*e+a^3", "2*e+b", "2*e+a*b", "2*e+a^2*b",
                           "2*e+a^3*b"}));
  put(from_exprs("I(<a>)", {"2*e+a", "2*e+a^2", "2*e+a^3", "(2*e+a)*b", "(2*e+a^2)*b",
                            "(2*e+a)^3*b"}));
  put(from_exprs("I(<a^2>)", {"2*e+a^2", "2*a+a^3", "2*b+a^2*b", "2*a*b+a^3*b"}));

  for (const auto& [label, piece] : rep.pieces)
    if (!piece.two_sided())
      throw std::logic_error("piece " + label + " failed the two-sided closure check");

  const Ideal& c = rep.pieces.at("C");
  const Ideal& b = rep.pieces.at("B");
  const Ideal& f3 = rep.pieces.at("F3-summand-3");
  const Ideal& g3 = rep.pieces.at("F3-summand-4");
  const Ideal& d = rep.pieces.at("D");
  const Ideal& i_q8 = rep.pieces.at("I(Q8)");
  const Ideal& i_a = rep.pieces.at("I(<a>)");
  const Ideal& i_a2 = rep.pieces.at("I(<a^2>)");

  rep.chain_ring = direct_split(whole_ring_ideal(r), c, i_q8);
  rep.chain_i_q8 = direct_split(i_q8, b, i_a);
  rep.chain_i_a = direct_split(i_a, d, i_a2);
  rep.chain_d = direct_split(d, f3, g3);
  rep.block_minimal = is_minimal_ideal(i_a2);

  // right-multiplying the block by its subgroup's augmentation generator
  // reproduces the block
  const RingElement omega_gen = parse_element(r, "a^2 + 2*e");
  Matrix image(r->field, 0, 8);
  for (std::size_t row = 0; row < i_a2.basis.rows; ++row)
    image.append_row((from_coeffs(r, i_a2.basis.row(row)) * omega_gen).coeffs);
  rep.omega_identity = rref(std::move(image)) == i_a2.basis;

  const Decomposition w = wedderburn_decompose(r);
  std::vector<const Ideal*> claimed = {&c, &b, &f3, &g3, &i_a2};
  rep.matches_wedderburn = w.summands.size() == claimed.size();
  for (const Ideal* piece : claimed) {
    bool found = false;
    for (const Ideal& summand : w.summands)
      if (same_ideal(summand, *piece)) {
        found = true;
        break;
      }
    rep.matches_wedderburn = rep.matches_wedderburn && found;
    rep.summand_dims.push_back(piece->dim());
  }
  std::sort(rep.summand_dims.begin(), rep.summand_dims.end());
  return rep;
}

}  // namespace ringforge
