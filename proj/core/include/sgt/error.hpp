#ifndef SGT_ERROR_HPP
#define SGT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A malformed input or violated precondition (bad walk, unknown id, mismatched graphs).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A search or sweep exceeded its configured budget where no in-band verdict exists.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A parse failure in one of the text formats; carries the 1-based line number.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line)
        : ValidationError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace sgt

#endif
