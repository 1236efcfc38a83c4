#pragma once

#include <span>

#include "triag/polynomial.hpp"

namespace triag {

// Reduced quotient of polynomials: gcd(num, den) = 1 and the denominator is
// monic on its graded-lex leading term. The zero function is 0/1.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(Universe u) : num_(u), den_(Polynomial::constant(u, 1)) {}
    RationalFn(Polynomial num, Polynomial den);
    explicit RationalFn(Polynomial num);
    RationalFn(Universe u, const Rat& c) : RationalFn(Polynomial::constant(u, c)) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const Universe& universe() const { return num_.universe(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator*(const Rat& c) const;
    RationalFn pow_int(long e) const;

    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    // Exact value; throws DenominatorVanishes when den(point) == 0.
    Rat eval(std::span<const Rat> point) const;

private:
    void reduce();
    Polynomial num_, den_;
};

} // namespace triag
