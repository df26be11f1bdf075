#pragma once

#include <stdexcept>
#include <string>

namespace residua {

// Bad user input: unknown type label, malformed parameters, missing fixture.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was hit. Carries how far the computation got so callers
// can report the partial state instead of losing it.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::string partial_summary)
      : std::runtime_error(what), partial(std::move(partial_summary)) {}
  std::string partial;
};

// A mathematical precondition of an operation does not hold for the given
// arguments (e.g. an integration radius on or beyond a pole).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace residua
