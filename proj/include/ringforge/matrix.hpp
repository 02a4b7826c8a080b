#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ringforge/gf.hpp"

namespace ringforge {

// Dense row-major matrix over Z_p.
//
// Row spaces are canonicalized by rref() with zero rows dropped, so two
// subspaces are equal iff their canonical bases compare equal byte for byte.
// A 0-row matrix with c columns is the zero subspace of Z_p^c.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  PrimeField field;
  std::vector<scalar> a;

  Matrix() = default;
  Matrix(PrimeField f, std::size_t r, std::size_t c)
      : rows(r), cols(c), field(f), a(r * c, 0) {}

  static Matrix identity(PrimeField f, std::size_t n);
  static Matrix from_rows(PrimeField f, std::size_t ncols,
                          const std::vector<std::vector<scalar>>& rows);

  scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  scalar at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::vector<scalar> row(std::size_t r) const;
  void append_row(const std::vector<scalar>& v);
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;
};

enum class SpanOp { sum, intersection };

// Reduced row echelon form with zero rows dropped: the canonical
// representative of the row space.
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);

// True iff v lies in the row space of `space` (which need not be in rref).
bool membership(const Matrix& space, const std::vector<scalar>& v);

// Canonical basis of the sum or intersection of two row spaces.
// Intersection goes through the kernel of [A^T | B^T].
Matrix combine(const Matrix& a, const Matrix& b, SpanOp op);

// Canonical basis of {x : m x^T = 0}.
Matrix kernel(const Matrix& m);

Matrix stack(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
std::vector<scalar> mat_vec(const Matrix& m, const std::vector<scalar>& v);

// Advance v through Z_p^n in odometer order; false once it wraps back to 0.
bool next_vector(std::vector<scalar>& v, unsigned p);

// One solution of A x = b (free variables set to 0), or nullopt.
std::optional<std::vector<scalar>> solve(const Matrix& a, const std::vector<scalar>& b);

}  // namespace ringforge
