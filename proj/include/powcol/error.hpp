// Exception types thrown by the powcol library.

#ifndef POWCOL_ERROR_HPP_
#define POWCOL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powcol {

  //! Base class for every error raised by powcol.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A Cayley table that is not square, or is empty.
  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A Cayley table entry outside [0, N).
  class ClosureViolation : public Error {
   public:
    ClosureViolation(std::size_t row, std::size_t col, long long value)
        : Error("closure violation at cell (" + std::to_string(row) + ","
                + std::to_string(col) + "): entry " + std::to_string(value)
                + " is out of range"),
          row_(row),
          col_(col) {}

    [[nodiscard]] std::size_t row() const noexcept {
      return row_;
    }
    [[nodiscard]] std::size_t col() const noexcept {
      return col_;
    }

   private:
    std::size_t row_;
    std::size_t col_;
  };

  class DuplicateName : public Error {
   public:
    using Error::Error;
  };

  //! Malformed Cayley text; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("parse error at line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  class MissingAssignment : public Error {
   public:
    using Error::Error;
  };

  class PartitionMismatch : public Error {
   public:
    using Error::Error;
  };

  //! Raised by the exact oracles when a graph exceeds the configured size.
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  class NoRelationInBound : public Error {
   public:
    using Error::Error;
  };

  class ParameterOutOfRange : public Error {
   public:
    using Error::Error;
  };

}  // namespace powcol

#endif  // POWCOL_ERROR_HPP_
