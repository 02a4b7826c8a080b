#include "ringforge/error.hpp"

namespace ringforge {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::not_closed: return "NotClosed";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_associative: return "NotAssociative";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::not_q8: return "NotQ8";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::not_a_chain: return "NotAChain";
    case errc::not_invariant: return "NotInvariant";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::wrong_ring: return "WrongRing";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::too_large: return "TooLarge";
    case errc::char_divides_order: return "CharDividesOrder";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::zero_ideal: return "ZeroIdeal";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(errc code, const std::string& message) { throw error(code, message); }

}  // namespace ringforge
