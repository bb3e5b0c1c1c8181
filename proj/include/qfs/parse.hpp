#pragma once

#include <string>
#include <vector>

#include "qfs/poly.hpp"

namespace qfs {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Parses the polynomial grammar
//   poly := term ('+' term)*
//   term := coeff? mono?
//   mono := var('^'int)? ('*'? var('^'int)?)*
// over the declared variables. Coefficients are decimal integers reduced into
// Z/p^e; a leading '-' on a term negates it. Juxtaposed single-letter
// variables ("xyz") are accepted by greedy splitting against the declared
// names; undeclared identifiers are a hard error.
SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& vars, Modulus mod);

}  // namespace qfs
