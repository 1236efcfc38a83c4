#pragma once

#include <string>

#include "triag/invariant_expr.hpp"
#include "triag/vector_field.hpp"

namespace triag {

// Canonical text forms. Polynomials print their terms in descending
// graded-lex order with explicit coefficients ("-1*n_2_3*n_1_4 + 1*n_1_3*n_2_4");
// printing then parsing round-trips bit-exactly.
std::string to_text(const Polynomial& p);
std::string to_text(const RationalFn& r);
std::string to_text(const InvariantExpr& e);
std::string to_text(const VectorField& f);

InvariantExpr parse_invariant(const std::string& text, const Universe& u);
Polynomial parse_polynomial(const std::string& text, const Universe& u);

} // namespace triag
