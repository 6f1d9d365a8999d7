#pragma once

#include <stdexcept>
#include <string>

namespace kkdrop {

// Precondition violations raised by library operations.  The CLI maps these
// to exit code 1; the diagnostic names the violated precondition.
enum class Errc {
  NotCoprime,
  BadModulus,
  InvalidAlgebra,
  AlgebraMismatch,
  NotInGroup,
  ModulusNotMultiple,
  NotPositive,
  NotDecomposable,
  Mismatch,
  NotTorsionForm,
  BadMultiplicity,
  NoSolution,
  BadTorsionIndex,
  Overflow,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// A cross-module invariant failed at runtime (not a caller mistake).
// The CLI maps this to exit code 2 and prints the witness.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kkdrop
