#ifndef MCAL_ERRORS_HPP
#define MCAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcal {

/// Base class for all domain errors raised by the library. `kind()` is a
/// stable machine-readable tag used by the CLI's JSON error wrapper.
class McalError : public std::runtime_error {
public:
  explicit McalError(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

/// The defining identity ac^t = bd^t != eps failed for a quadruple.
class MembershipViolation : public McalError {
public:
  MembershipViolation(const std::string& what, std::string lhs, std::string rhs)
      : McalError(what), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
  const char* kind() const noexcept override { return "membership-violation"; }
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

private:
  std::string lhs_, rhs_;  // the two evaluated sides, rendered
};

class ZeroInput : public McalError {
public:
  explicit ZeroInput(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "zero-input"; }
};

class NotIdempotent : public McalError {
public:
  explicit NotIdempotent(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "not-idempotent"; }
};

class EmptyIndex : public McalError {
public:
  explicit EmptyIndex(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "empty-index"; }
};

class SizeGuard : public McalError {
public:
  explicit SizeGuard(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "size-guard"; }
};

class CountableAlphabet : public McalError {
public:
  explicit CountableAlphabet(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "countable-alphabet"; }
};

class SizeMismatch : public McalError {
public:
  explicit SizeMismatch(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "size-mismatch"; }
};

class LetterOutOfRange : public McalError {
public:
  explicit LetterOutOfRange(const std::string& what) : McalError(what) {}
  const char* kind() const noexcept override { return "letter-out-of-range"; }
};

/// Parse failure in the element/word grammar; `position()` is the byte
/// offset of the offending token in the input.
class SyntaxError : public McalError {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : McalError(what), position_(position) {}
  const char* kind() const noexcept override { return "syntax-error"; }
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace mcal

#endif
