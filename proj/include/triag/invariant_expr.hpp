#pragma once

#include <map>
#include <vector>

#include "triag/rational_fn.hpp"

namespace triag {

struct PowerFactor {
    Polynomial base;
    Rat exponent;
    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

struct LogTerm {
    RationalFn coeff;
    Polynomial arg;
    friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

// Closed-form invariant candidate:
//
//     rational  +  coeff * prod_i base_i^exponent_i  +  sum_j coeff_j * ln(arg_j)
//
// Power products and logs are formal symbols over the rational-function
// field with the usual derivation rules. Zero testing is component-wise;
// it assumes the formal parts are independent of the rational part, which
// holds whenever non-integer or large exponents keep a power product
// unexpanded (small integer powers are folded into the rational part).
class InvariantExpr {
public:
    InvariantExpr() = default;
    explicit InvariantExpr(Universe u) : rational_(u), power_coeff_(u) {}
    InvariantExpr(RationalFn r) : rational_(std::move(r)), power_coeff_(rational_.universe()) {}
    InvariantExpr(Polynomial p) : InvariantExpr(RationalFn(std::move(p))) {}

    static InvariantExpr power_product(RationalFn coeff, std::vector<PowerFactor> factors);
    static InvariantExpr log_term(RationalFn coeff, Polynomial arg);

    const Universe& universe() const { return rational_.universe(); }
    const RationalFn& rational_part() const { return rational_; }
    const RationalFn& power_coeff() const { return power_coeff_; }
    const std::vector<PowerFactor>& power_factors() const { return power_factors_; }
    const std::vector<LogTerm>& log_terms() const { return log_terms_; }

    // The coefficient carrying the expression when a power product is
    // present, the plain rational part otherwise.
    const RationalFn& base() const { return power_factors_.empty() ? rational_ : power_coeff_; }

    bool is_plain_rational() const { return power_factors_.empty() && log_terms_.empty(); }
    bool is_zero() const {
        return rational_.is_zero() && power_factors_.empty() && log_terms_.empty();
    }
    // True when two distinct log arguments share a non-constant factor, in
    // which case component-wise zero testing is not conclusive.
    bool has_shared_log_factors() const;

    InvariantExpr operator-() const;
    InvariantExpr operator+(const InvariantExpr& o) const;
    InvariantExpr operator-(const InvariantExpr& o) const;
    InvariantExpr operator*(const InvariantExpr& o) const;
    InvariantExpr operator/(const InvariantExpr& o) const;
    InvariantExpr scaled(const RationalFn& c) const;
    InvariantExpr pow(const Rat& e) const;

    friend bool operator==(const InvariantExpr&, const InvariantExpr&) = default;

    // Exact value at a point; throws NonEvaluable on log terms or
    // non-integer exponents, DenominatorVanishes when division fails.
    Rat eval(std::span<const Rat> point) const;

    // Exact gradient at a point. Power products contribute through their
    // logarithmic derivative (the formal unit evaluates to 1); each formal
    // ln(arg) takes the value supplied in `log_values`.
    std::vector<Rat> gradient_at(std::span<const Rat> point,
                                 const std::map<Polynomial, Rat, PolyLess>& log_values) const;

private:
    void normalize();
    RationalFn rational_;
    RationalFn power_coeff_;
    std::vector<PowerFactor> power_factors_;
    std::vector<LogTerm> log_terms_;

    friend class VectorField;
};

} // namespace triag
