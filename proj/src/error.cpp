#include "magic24/error.hpp"

namespace magic24 {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NonRegular: return "NonRegular";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::GeneratorNotAutomorphism: return "GeneratorNotAutomorphism";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::PoolMismatch: return "PoolMismatch";
    case Errc::InvalidSuperimposition: return "InvalidSuperimposition";
    case Errc::BadTargetSum: return "BadTargetSum";
    case Errc::BadCheckpoint: return "BadCheckpoint";
    case Errc::UnknownStructure: return "UnknownStructure";
    case Errc::WrongStructure: return "WrongStructure";
    case Errc::ParseError: return "ParseError";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace magic24
