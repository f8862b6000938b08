#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dcol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition failures on caller input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Exact oracles refuse instances above their size caps.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int size, int cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size), cap_(cap) {}
  int size() const noexcept { return size_; }
  int cap() const noexcept { return cap_; }

 private:
  int size_;
  int cap_;
};

// An engine's hypothesis does not hold for the input. The witness names
// the vertices (or edges, flattened as pairs) that show it.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(const std::string& what, std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace dcol
