#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcr {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or recursion cap was hit. `cap_name` names the knob to raise.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::string cap_name, std::size_t cap, const std::string& detail)
      : std::runtime_error(detail + " (" + cap_name + " = " + std::to_string(cap) + ")"),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcr
