#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace wk {

// Every failure the library can produce, in one flat enum so the C layer can
// map them to stable status codes.
enum class Errc {
  MalformedToken,
  CrossingCountNotTwo,
  DuplicateRole,
  SignMismatch,
  UnknownCrossing,
  InapplicableMove,
  BadModulus,
  NotRankOne,
  BadGap,
  BadParameter,
  IoError,
  SchemaError,
  FingerprintMismatch,
  CatalogMissing,
  InternalInconsistency,
  BadArgument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace wk
