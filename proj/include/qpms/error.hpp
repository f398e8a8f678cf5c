#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::size_t position, char symbol)
      : Error("unknown symbol '" + std::string(1, symbol) + "' at position " +
              std::to_string(position)),
        position_(position),
        symbol_(symbol) {}

  std::size_t position() const noexcept { return position_; }
  char symbol() const noexcept { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

class MalformedFasta : public Error {
 public:
  using Error::Error;
};

/// An instance or command parameter violates a documented constraint.
class BadParams : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadStart : public Error {
 public:
  using Error::Error;
};

}  // namespace qpms
