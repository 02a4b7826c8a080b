#pragma once

#include <cstdint>

namespace ringforge {

using scalar = std::uint32_t;

bool is_prime(unsigned n);

// The prime field Z_p. Scalars are stored as least nonnegative residues.
struct PrimeField {
  unsigned p = 2;

  PrimeField() = default;
  explicit PrimeField(unsigned prime);

  scalar add(scalar a, scalar b) const { return (a + b) % p; }
  scalar sub(scalar a, scalar b) const { return (a + p - b) % p; }
  scalar mul(scalar a, scalar b) const {
    return static_cast<scalar>((static_cast<std::uint64_t>(a) * b) % p);
  }
  scalar neg(scalar a) const { return a == 0 ? 0 : p - a; }
  scalar inv(scalar a) const;  // a != 0
  scalar pow(scalar a, std::uint64_t e) const;
  scalar reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<scalar>(r < 0 ? r + p : r);
  }

  bool operator==(const PrimeField&) const = default;
};

}  // namespace ringforge
