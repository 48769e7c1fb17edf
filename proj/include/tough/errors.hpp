#pragma once

#include <stdexcept>
#include <string>

namespace tough {

/// Malformed input document (edge-list files, CLI-supplied data).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on inputs outside its contract
/// (complete graph passed to the toughness solver, odd matching size, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace tough
