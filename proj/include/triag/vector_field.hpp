#pragma once

#include <map>

#include "triag/invariant_expr.hpp"

namespace triag {

// First-order derivation sum_v coeff_v(vars) * d/d(var v) with polynomial
// coefficients. Absent entries are zero.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Universe u) : u_(u) {}

    static VectorField coordinate(Universe u, VarIdx v) {
        VectorField f(u);
        f.add_component(v, Polynomial::constant(u, 1));
        return f;
    }

    const Universe& universe() const { return u_; }
    const std::map<VarIdx, Polynomial>& components() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial component(VarIdx v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? Polynomial(u_) : it->second;
    }

    void add_component(VarIdx v, const Polynomial& p);

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const Rat& c) const;
    VectorField scaled(const Polynomial& p) const;
    friend bool operator==(const VectorField&, const VectorField&) = default;

    Polynomial apply(const Polynomial& p) const;
    RationalFn apply(const RationalFn& r) const;
    InvariantExpr apply(const InvariantExpr& e) const;

    // Commutator as a field: [v,w]_j = v(w_j) - w(v_j).
    static VectorField commutator(const VectorField& v, const VectorField& w);

private:
    Universe u_;
    std::map<VarIdx, Polynomial> coeffs_;
};

} // namespace triag
