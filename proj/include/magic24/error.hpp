#pragma once

#include <stdexcept>
#include <string>

namespace magic24 {

enum class Errc {
  NonRegular,
  NonIntegral,
  LengthMismatch,
  NotCentrallySymmetric,
  CapExceeded,
  GeneratorNotAutomorphism,
  Inconsistent,
  PoolMismatch,
  InvalidSuperimposition,
  BadTargetSum,
  BadCheckpoint,
  UnknownStructure,
  WrongStructure,
  ParseError,
  IoFailure,
};

const char* errc_name(Errc c) noexcept;

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace magic24
