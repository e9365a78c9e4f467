#include "whrank/error.hpp"

namespace whrank {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_inverse: return "NoInverse";
    case Errc::not_latin_square: return "NotLatinSquare";
    case Errc::bad_action: return "BadAction";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::bad_prime_power: return "BadPrimePower";
    case Errc::not_normalizing: return "NotNormalizing";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_abelian: return "NotAbelian";
    case Errc::not_generating: return "NotGenerating";
    case Errc::bad_exponent: return "BadExponent";
    case Errc::not_central: return "NotCentral";
    case Errc::not_homomorphism: return "NotHomomorphism";
    case Errc::kernel_condition: return "KernelCondition";
    case Errc::inner_not_contained: return "InnerNotContained";
    case Errc::parse_error: return "ParseError";
    case Errc::inconsistent_powermap: return "InconsistentPowermap";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::missing_prime: return "MissingPrime";
    case Errc::mismatch: return "Mismatch";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

GroupError::GroupError(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace whrank
