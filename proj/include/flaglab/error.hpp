#pragma once

#include <stdexcept>
#include <string>

namespace flaglab {

enum class Errc {
  NotAPrimePower,
  DivisionByZero,
  AmbientMismatch,
  OutOfRange,
  MemoryBudgetExceeded,
  IndexOutOfRange,
  DuplicateIndex,
  SpecIncidenceViolation,
  NotACoclique,
  NotMaximal,
  WrongDimension,
  NonMaximalWeightSpectrum,
  NotIntersecting,
  MixedDimensions,
  NotPairwiseSkew,
  SpaceNotInFamily,
  ViewTooLarge,
  UndefinedBranch,
  BadFormat,
  IoError,
};

const char* errc_name(Errc c);

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace flaglab
