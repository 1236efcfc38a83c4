#include "triag/vector_field.hpp"

namespace triag {

void VectorField::add_component(VarIdx v, const Polynomial& p) {
    if (v >= u_.size()) throw RangeError("field component outside universe");
    require_same(u_, p.universe());
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(v, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same(u_, o.u_);
    VectorField r = *this;
    for (const auto& [v, p] : o.coeffs_) r.add_component(v, p);
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    require_same(u_, o.u_);
    VectorField r = *this;
    for (const auto& [v, p] : o.coeffs_) r.add_component(v, -p);
    return r;
}

VectorField VectorField::operator*(const Rat& c) const {
    VectorField r(u_);
    if (c == 0) return r;
    for (const auto& [v, p] : coeffs_) r.coeffs_.emplace(v, p * c);
    return r;
}

VectorField VectorField::scaled(const Polynomial& p) const {
    VectorField r(u_);
    if (p.is_zero()) return r;
    for (const auto& [v, c] : coeffs_) r.add_component(v, c * p);
    return r;
}

Polynomial VectorField::apply(const Polynomial& p) const {
    require_same(u_, p.universe());
    Polynomial r(u_);
    for (const auto& [v, c] : coeffs_) {
        Polynomial d = p.derivative(v);
        if (!d.is_zero()) r += c * d;
    }
    return r;
}

RationalFn VectorField::apply(const RationalFn& r) const {
    require_same(u_, r.universe());
    // quotient rule with an early zero test on the unreduced numerator
    Polynomial vn = apply(r.num());
    if (r.den().is_constant()) {
        if (vn.is_zero()) return RationalFn(u_);
        return RationalFn(std::move(vn), r.den());
    }
    Polynomial num = vn * r.den() - r.num() * apply(r.den());
    if (num.is_zero()) return RationalFn(u_);
    return RationalFn(std::move(num), r.den() * r.den());
}

InvariantExpr VectorField::apply(const InvariantExpr& e) const {
    require_same(u_, e.universe());
    InvariantExpr out(u_);
    out.rational_ = apply(e.rational_part());

    if (!e.power_factors().empty()) {
        // d(c * prod p^a) = [dc + c * sum a_i dp_i / p_i] * prod p^a
        RationalFn coeff = apply(e.power_coeff());
        for (const auto& [base, exp] : e.power_factors()) {
            Polynomial db = apply(base);
            if (db.is_zero()) continue;
            coeff = coeff + e.power_coeff() * RationalFn(std::move(db), base) * exp;
        }
        out.power_coeff_ = std::move(coeff);
        out.power_factors_ = e.power_factors();
    }

    for (const auto& lt : e.log_terms()) {
        // d(c ln q) = dc ln q + c dq / q
        RationalFn dc = apply(lt.coeff);
        if (!dc.is_zero()) out.log_terms_.push_back({std::move(dc), lt.arg});
        Polynomial dq = apply(lt.arg);
        if (!dq.is_zero()) out.rational_ = out.rational_ + lt.coeff * RationalFn(std::move(dq), lt.arg);
    }

    out.normalize();
    return out;
}

VectorField VectorField::commutator(const VectorField& v, const VectorField& w) {
    require_same(v.u_, w.u_);
    VectorField r(v.u_);
    for (const auto& [j, wj] : w.coeffs_) r.add_component(j, v.apply(wj));
    for (const auto& [j, vj] : v.coeffs_) r.add_component(j, -w.apply(vj));
    return r;
}

} // namespace triag
