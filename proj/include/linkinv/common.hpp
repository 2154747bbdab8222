#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace linkinv {

// All arithmetic in the core is exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Malformed input text (graph files, scripts). line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A mathematical precondition does not hold for the given input (not negative
// definite, disconnected, bad vertex present, ...). Distinct from ParseError so
// the CLI can map the two onto different exit codes.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool fits_json_number(const Int& v) {
    static const Int bound = Int(1) << 53;
    return abs(v) < bound;
}

}  // namespace linkinv
