#pragma once

#include <string>

#include "talex/fox.hpp"
#include "talex/laurent.hpp"

namespace talex {

// Polynomial text: sum of terms `c*t1^a1*t2^a2` with signed integer
// exponents; `t` is accepted for `t1`. vars = 0 infers the variable count
// from the largest index present (at least 1).
LaurentPoly parse_poly(const std::string& text, int vars = 0);

// JSON form: [{"coeff": "<decimal>", "exps": [..]}, ...]
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& json, int vars = 0);

// Word text: `x0 x3^-1 x2` (whitespace separated, optional ^k).
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

}  // namespace talex
