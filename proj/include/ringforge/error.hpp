#pragma once

#include <stdexcept>
#include <string>

namespace ringforge {

enum class errc {
  not_prime,
  not_closed,
  no_identity,
  no_inverse,
  not_associative,
  group_too_large,
  unknown_preset,
  not_q8,
  not_a_subgroup,
  not_normal,
  not_a_chain,
  not_invariant,
  ring_mismatch,
  syntax_error,
  unknown_symbol,
  wrong_ring,
  dimension_mismatch,
  too_large,
  char_divides_order,
  not_an_ideal,
  zero_ideal,
  io_error,
};

const char* errc_name(errc code);

// Every failure the library can diagnose is thrown as one of these; code()
// identifies the condition and what() carries the witness (offending triple,
// element index, input position, ...).
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message);
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& message);

}  // namespace ringforge
