#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpd {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input structure references something that does not exist, or a required
  // map is not total. Distinct from axiom violations, which go in reports.
  class MalformedStructure : public Error {
   public:
    using Error::Error;
  };

  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  class UnknownArrow : public Error {
   public:
    using Error::Error;
  };

  class UnknownObject : public Error {
   public:
    using Error::Error;
  };

  class NotComposable : public Error {
   public:
    using Error::Error;
  };

  class EmptySet : public Error {
   public:
    using Error::Error;
  };

  class InvalidGroup : public Error {
   public:
    using Error::Error;
  };

  class NonCommutativeGroup : public Error {
   public:
    NonCommutativeGroup(std::string const& msg, std::string left, std::string right)
        : Error(msg), left_(std::move(left)), right_(std::move(right)) {}

    std::string const& left() const noexcept { return left_; }
    std::string const& right() const noexcept { return right_; }

   private:
    std::string left_;
    std::string right_;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class DomainMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotSubset : public Error {
   public:
    using Error::Error;
  };

  // A property that holds for every valid input failed; the input was not
  // valid or the library has a bug.
  class InternalCheckFailed : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    enum class Kind { syntax, unknown_identifier, duplicate_declaration, io };

    ParseError(Kind kind, std::size_t line, std::string const& msg, std::string const& file = {})
        : Error(format(line, msg, file)), kind_(kind), line_(line), detail_(msg) {}

    Kind kind() const noexcept { return kind_; }
    // 1-based; 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }
    // Message without the file and line prefix.
    std::string const& detail() const noexcept { return detail_; }

   private:
    static std::string format(std::size_t line, std::string const& msg, std::string const& file) {
      std::string out = file.empty() ? "" : file + ": ";
      if (line != 0) {
        out += "line " + std::to_string(line) + ": ";
      }
      return out + msg;
    }

    Kind        kind_;
    std::size_t line_;
    std::string detail_;
  };

}  // namespace grpd
