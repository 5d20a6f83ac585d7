#ifndef GAMMALC_ERROR_HPP
#define GAMMALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gammalc {

enum class ErrorCode {
  parse,
  range,
  symmetry_violation,
  negative_entry,
  order_too_small,
  length_mismatch,
  hypothesis_violation,
  endpoint_mismatch,
  cap_exceeded,
  // Raised when a statement the mathematics guarantees is observed to fail.
  invariant_violation,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gammalc

#endif
