#include "triag/rational_fn.hpp"

namespace triag {

RationalFn::RationalFn(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same(num_.universe(), den_.universe());
    if (den_.is_zero()) throw RangeError("rational function with zero denominator");
    reduce();
}

RationalFn::RationalFn(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.universe(), 1)) {}

bool RationalFn::is_one() const {
    return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant() &&
           num_.constant_value() == 1;
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.universe(), 1);
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.try_divide(den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::constant(num_.universe(), 1);
        } else {
            Polynomial g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *num_.try_divide(g);
                den_ = *den_.try_divide(g);
            }
        }
    }
    const Rat lc = den_.leading_coefficient();
    if (lc != 1) {
        const Rat inv = 1 / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw RangeError("division by zero rational function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator*(const Rat& c) const {
    if (c == 0) return RationalFn(universe());
    RationalFn r = *this;
    r.num_ = r.num_ * c;
    return r;
}

RationalFn RationalFn::pow_int(long e) const {
    if (e == 0) return RationalFn(universe(), Rat(1));
    if (is_zero()) {
        if (e < 0) throw RangeError("zero rational function to negative power");
        return *this;
    }
    const std::uint32_t n = static_cast<std::uint32_t>(e < 0 ? -e : e);
    Polynomial pn = num_.pow(n);
    Polynomial pd = den_.pow(n);
    return e > 0 ? RationalFn(std::move(pn), std::move(pd)) : RationalFn(std::move(pd), std::move(pn));
}

Rat RationalFn::eval(std::span<const Rat> point) const {
    const Rat d = den_.eval(point);
    if (d == 0) throw DenominatorVanishes("denominator vanishes at sample point");
    return num_.eval(point) / d;
}

} // namespace triag
