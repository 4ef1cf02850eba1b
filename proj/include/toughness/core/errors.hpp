#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tough {

// Base of every error raised by the library. The CLI maps all of them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Input outside the mathematical domain of an operation (disconnected host, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive routines refuse graphs above their vertex cap instead of running for ages.
class SizeCapError : public Error {
 public:
  SizeCapError(const std::string& op, std::size_t n, std::size_t cap)
      : Error(op + ": " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap)) {}
};

class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised by the cutset kernels when an installed deadline expires.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded() : Error("time budget exceeded") {}
};

}  // namespace tough
