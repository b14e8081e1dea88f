#ifndef DSN_ERRORS_HPP
#define DSN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsn {

// Input text does not conform to the file format; message names the line.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::runtime_error {
public:
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a configured cap (vertex count, terminal count, budget).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dsn

#endif
