#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapsum {

// Malformed textual input (graph6 strings, edge lists, CLI family specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  // 1-based line number when parsing a multi-line source, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

// A caller violated a documented precondition (bad vertex, not a cover, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact algorithm refused an instance beyond its size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed. Seeing one of these is a bug.
class AlgorithmError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lapsum
