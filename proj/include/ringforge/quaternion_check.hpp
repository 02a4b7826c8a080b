#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ringforge {

// Exact Gaussian-integer arithmetic for the 2x2 matrix model of the
// quaternion units. No floating point anywhere.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
  bool operator==(const GaussianInt&) const = default;
};

struct GaussMat2 {
  std::array<GaussianInt, 4> m{};  // row-major

  friend GaussMat2 operator*(const GaussMat2& a, const GaussMat2& b);
  friend GaussMat2 operator-(const GaussMat2& a);
  bool operator==(const GaussMat2&) const = default;
};

// Verifies, with zero tolerance, that E, I = diag(i, -i), J = [[0,1],[-1,0]],
// K = [[0,i],[i,0]] satisfy the defining relations and that the eight signed
// matrices multiply exactly like the q8 preset. Seven named checks:
// the three squares, the three product chains, and the isomorphism.
struct QuaternionMatrixCheck {
  struct Relation {
    std::string name;
    bool ok = false;
  };
  std::vector<Relation> relations;
  bool all_ok = false;
};

QuaternionMatrixCheck quaternion_matrix_check();

}  // namespace ringforge
