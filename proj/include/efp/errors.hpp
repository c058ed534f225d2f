#pragma once

#include <stdexcept>
#include <string>

namespace efp {

struct NotEnvyFree : std::runtime_error {
  explicit NotEnvyFree(const std::string& what) : std::runtime_error(what) {}
};

struct TrivialInstance : std::runtime_error {
  explicit TrivialInstance(const std::string& what) : std::runtime_error(what) {}
};

struct InstanceTooLarge : std::runtime_error {
  explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct TooManyTypes : std::runtime_error {
  explicit TooManyTypes(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidEpsilon : std::invalid_argument {
  explicit InvalidEpsilon(const std::string& what) : std::invalid_argument(what) {}
};

struct BadParams : std::invalid_argument {
  explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

struct MalformedValuationVector : std::invalid_argument {
  explicit MalformedValuationVector(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace efp
