#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coframe.hpp"

namespace su2curv {

// Input errors carry a position when one makes sense.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line = 0, int col = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                          (col > 0 ? ":" + std::to_string(col) : "") + ": " + msg
                                    : msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

// Sums of signed rational multiples of increasing index tuples:
//   "-2*12 - 2*34", "1/2*23", "0". Degree is enforced when >= 0.
Form parse_form_expr(const std::string& text, int expected_degree = -1, int line = 0);

struct Expectation {
  std::string key;    // dotted path into the JSON report, e.g. flags.hypo
  std::string value;  // literal value, e.g. "true" or "-4"
};

struct StructureFile {
  std::string name;
  Coframe5 cf;
  std::vector<Expectation> expected;
};

// One "dK = expr" line per nonzero differential, optional "name:" line,
// optional "expect <key> = <value>" lines, '#' comments. The parsed coframe
// must satisfy the Jacobi identity.
StructureFile parse_structure_file(const std::string& text);

// Canonical printer; parse(print(cf)) == cf.
std::string print_structure_file(const Coframe5& cf);

}  // namespace su2curv
