#pragma once

#include <stdexcept>
#include <string>

namespace realcmp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositionMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IllFormedRelation : public Error {
 public:
  using Error::Error;
};

/// A simplicial identity, functor law or map commutation failed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input. `pointer` is a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace realcmp
