#pragma once

#include <stdexcept>
#include <string>

namespace lat13 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : Error {
  NotPositiveDefinite() : Error("matrix is not positive-definite") {}
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct KindMismatch : Error {
  KindMismatch() : Error("embeddings have different kinds") {}
};

struct NonTermination : Error {
  using Error::Error;
};

struct NotReduced : Error {
  using Error::Error;
};

struct DegenerateCone : Error {
  using Error::Error;
};

struct RetryExhausted : Error {
  using Error::Error;
};

struct InternalAssertion : Error {
  using Error::Error;
};

} // namespace lat13
