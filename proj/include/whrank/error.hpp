#ifndef WHRANK_ERROR_HPP
#define WHRANK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace whrank {

// Failure categories shared by every module. The CLI maps all of them to
// exit code 2; tests match on the code rather than the message.
enum class Errc {
  cap_exceeded,
  invalid_permutation,
  not_associative,
  no_inverse,
  not_latin_square,
  bad_action,
  bad_parameters,
  bad_prime_power,
  not_normalizing,
  budget_exceeded,
  not_normal,
  not_abelian,
  not_generating,
  bad_exponent,
  not_central,
  not_homomorphism,
  kernel_condition,
  inner_not_contained,
  parse_error,
  inconsistent_powermap,
  size_mismatch,
  missing_prime,
  mismatch,
  io_error,
};

std::string_view errc_name(Errc code);

class GroupError : public std::runtime_error {
 public:
  GroupError(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace whrank

#endif  // WHRANK_ERROR_HPP
