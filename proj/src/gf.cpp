#include "ringforge/gf.hpp"

#include "ringforge/error.hpp"

namespace ringforge {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned prime) : p(prime) {
  if (!is_prime(prime)) raise(errc::not_prime, std::to_string(prime) + " is not prime");
}

scalar PrimeField::pow(scalar a, std::uint64_t e) const {
  scalar r = 1 % p;
  scalar base = a % p;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

scalar PrimeField::inv(scalar a) const {
  if (a % p == 0) throw std::invalid_argument("division by zero in Z_" + std::to_string(p));
  return pow(a, p - 2);
}

}  // namespace ringforge
