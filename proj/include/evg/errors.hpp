#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace evg {

// Base for every data error the library reports. Logic errors (broken
// internal invariants) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyGraphError : public Error {
 public:
  EmptyGraphError() : Error("evolving graph needs at least one non-self-loop edge") {}
};

class InactiveRootError : public Error {
 public:
  using Error::Error;
};

class TimeOrderError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace evg
