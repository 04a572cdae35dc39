#ifndef ARTIN_ERROR_HPP
#define ARTIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorKind {
  UnknownVertex,
  SelfPair,
  BadLabel,
  DuplicateEdge,
  MissingLabel,   // full-edge convention with an undeclared pair
  TooLarge,
  UnknownGenerator,
  NotIrreducible,
  NotFCType,
  AmbiguousOddTarget,
  NotOddOddFree,
  NotAdmissible,
  LabelTooSmall,
  InfiniteLabel,
  NotInScope,
  NotRAAG,
  BadArgument,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry the 1-based input position that triggered them.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column = 0)
      : Error(ErrorKind::Parse,
              msg + " (line " + std::to_string(line) +
                  (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace artin

#endif
