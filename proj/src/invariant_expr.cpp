#include "triag/invariant_expr.hpp"

#include <algorithm>

namespace triag {

namespace {

// Conservative size estimate for expanding prod base_i^{|e_i|}; saturates.
// Products past the cap stay formal.
constexpr std::uint64_t kFoldCap = 500;

std::uint64_t expansion_estimate(const std::vector<PowerFactor>& factors) {
    std::uint64_t acc = 1;
    for (const auto& [base, e] : factors) {
        if (!rat_is_int(e)) return UINT64_MAX;
        const mpz_class a = abs(e.get_num());
        if (base.term_count() <= 1) {
            // a monomial power stays a monomial at any exponent
            if (a > 1000000) return UINT64_MAX;
            continue;
        }
        if (a > 64) return UINT64_MAX;
        const unsigned long n = a.get_ui();
        for (unsigned long i = 0; i < n; ++i) {
            acc *= base.term_count();
            if (acc > kFoldCap) return UINT64_MAX;
        }
    }
    return acc;
}

long to_long(const Rat& e) {
    if (!mpz_fits_slong_p(e.get_num().get_mpz_t()))
        throw RangeError("exponent out of machine range");
    return mpz_get_si(e.get_num().get_mpz_t());
}

} // namespace

InvariantExpr InvariantExpr::power_product(RationalFn coeff, std::vector<PowerFactor> factors) {
    InvariantExpr e(coeff.universe());
    e.power_coeff_ = std::move(coeff);
    e.power_factors_ = std::move(factors);
    e.normalize();
    return e;
}

InvariantExpr InvariantExpr::log_term(RationalFn coeff, Polynomial arg) {
    InvariantExpr e(coeff.universe());
    e.log_terms_.push_back({std::move(coeff), std::move(arg)});
    e.normalize();
    return e;
}

void InvariantExpr::normalize() {
    const Universe u = universe();

    std::vector<PowerFactor> kept;
    for (auto& pf : power_factors_) {
        require_same(u, pf.base.universe());
        if (pf.base.is_zero()) throw RangeError("power factor with zero base");
        pf.exponent.canonicalize();
        if (pf.exponent == 0) continue;
        if (pf.base.is_constant()) {
            if (!rat_is_int(pf.exponent))
                throw NonEvaluable("constant power-factor base with non-integer exponent");
            power_coeff_ = power_coeff_ * rat_pow(pf.base.constant_value(), to_long(pf.exponent));
            continue;
        }
        if (rat_is_int(pf.exponent)) {
            auto [unit, prim] = pf.base.primitive();
            if (unit != 1) {
                power_coeff_ = power_coeff_ * rat_pow(unit, to_long(pf.exponent));
                pf.base = std::move(prim);
            }
        }
        kept.push_back(std::move(pf));
    }
    power_factors_ = std::move(kept);

    std::sort(power_factors_.begin(), power_factors_.end(),
              [](const PowerFactor& a, const PowerFactor& b) { return poly_cmp(a.base, b.base) < 0; });
    std::vector<PowerFactor> merged;
    for (auto& pf : power_factors_) {
        if (!merged.empty() && poly_cmp(merged.back().base, pf.base) == 0) {
            merged.back().exponent += pf.exponent;
            if (merged.back().exponent == 0) merged.pop_back();
        } else {
            merged.push_back(std::move(pf));
        }
    }
    power_factors_ = std::move(merged);

    if (power_coeff_.is_zero()) power_factors_.clear();

    // small integer powers expand exactly; each factor folds on its own so
    // the representation does not depend on how the product was assembled
    std::vector<PowerFactor> formal;
    for (auto& pf : power_factors_) {
        if (expansion_estimate({pf}) != UINT64_MAX)
            power_coeff_ = power_coeff_ * RationalFn(pf.base).pow_int(to_long(pf.exponent));
        else
            formal.push_back(std::move(pf));
    }
    power_factors_ = std::move(formal);
    if (power_factors_.empty() && !power_coeff_.is_zero()) {
        rational_ = rational_ + power_coeff_;
        power_coeff_ = RationalFn(u);
    }

    std::vector<LogTerm> logs;
    for (auto& lt : log_terms_) {
        require_same(u, lt.arg.universe());
        if (lt.arg.is_zero()) throw RangeError("logarithm of zero polynomial");
        if (lt.coeff.is_zero()) continue;
        if (lt.arg.is_constant() && lt.arg.constant_value() == 1) continue;
        logs.push_back(std::move(lt));
    }
    std::sort(logs.begin(), logs.end(),
              [](const LogTerm& a, const LogTerm& b) { return poly_cmp(a.arg, b.arg) < 0; });
    log_terms_.clear();
    for (auto& lt : logs) {
        if (!log_terms_.empty() && poly_cmp(log_terms_.back().arg, lt.arg) == 0) {
            log_terms_.back().coeff = log_terms_.back().coeff + lt.coeff;
            if (log_terms_.back().coeff.is_zero()) log_terms_.pop_back();
        } else {
            log_terms_.push_back(std::move(lt));
        }
    }
}

bool InvariantExpr::has_shared_log_factors() const {
    for (std::size_t i = 0; i < log_terms_.size(); ++i)
        for (std::size_t j = i + 1; j < log_terms_.size(); ++j)
            if (!poly_gcd(log_terms_[i].arg, log_terms_[j].arg).is_constant()) return true;
    return false;
}

InvariantExpr InvariantExpr::operator-() const {
    InvariantExpr r = *this;
    r.rational_ = -r.rational_;
    r.power_coeff_ = -r.power_coeff_;
    for (auto& lt : r.log_terms_) lt.coeff = -lt.coeff;
    return r;
}

InvariantExpr InvariantExpr::operator+(const InvariantExpr& o) const {
    require_same(universe(), o.universe());
    InvariantExpr r = *this;
    r.rational_ = r.rational_ + o.rational_;
    if (!o.power_factors_.empty()) {
        if (r.power_factors_.empty()) {
            r.power_factors_ = o.power_factors_;
            r.power_coeff_ = o.power_coeff_;
        } else if (r.power_factors_ == o.power_factors_) {
            r.power_coeff_ = r.power_coeff_ + o.power_coeff_;
        } else {
            throw Error("sum of distinct formal power products is not representable");
        }
    }
    for (const auto& lt : o.log_terms_) r.log_terms_.push_back(lt);
    r.normalize();
    return r;
}

InvariantExpr InvariantExpr::operator-(const InvariantExpr& o) const { return *this + (-o); }

InvariantExpr InvariantExpr::scaled(const RationalFn& c) const {
    require_same(universe(), c.universe());
    InvariantExpr r = *this;
    r.rational_ = r.rational_ * c;
    r.power_coeff_ = r.power_coeff_ * c;
    for (auto& lt : r.log_terms_) lt.coeff = lt.coeff * c;
    r.normalize();
    return r;
}

InvariantExpr InvariantExpr::operator*(const InvariantExpr& o) const {
    require_same(universe(), o.universe());
    if (o.is_plain_rational()) return scaled(o.rational_);
    if (is_plain_rational()) return o.scaled(rational_);
    const bool lhs_power = log_terms_.empty() && rational_.is_zero();
    const bool rhs_power = o.log_terms_.empty() && o.rational_.is_zero();
    if (lhs_power && rhs_power) {
        std::vector<PowerFactor> factors = power_factors_;
        factors.insert(factors.end(), o.power_factors_.begin(), o.power_factors_.end());
        return power_product(power_coeff_ * o.power_coeff_, std::move(factors));
    }
    throw Error("product of transcendental expressions is not representable");
}

InvariantExpr InvariantExpr::operator/(const InvariantExpr& o) const {
    require_same(universe(), o.universe());
    if (o.is_plain_rational()) {
        if (o.rational_.is_zero()) throw RangeError("division by zero expression");
        return scaled(RationalFn(universe(), Rat(1)) / o.rational_);
    }
    if (o.log_terms_.empty() && o.rational_.is_zero()) {
        std::vector<PowerFactor> inv = o.power_factors_;
        for (auto& pf : inv) pf.exponent = -pf.exponent;
        InvariantExpr recip = power_product(RationalFn(universe(), Rat(1)) / o.power_coeff_, std::move(inv));
        return *this * recip;
    }
    throw Error("division by transcendental expression is not representable");
}

InvariantExpr InvariantExpr::pow(const Rat& e) const {
    const Universe u = universe();
    if (e == 0) return InvariantExpr(RationalFn(u, Rat(1)));
    if (!log_terms_.empty()) throw Error("power of a logarithmic expression is not representable");
    if (power_factors_.empty()) {
        if (rational_.is_zero()) {
            if (e < 0) throw RangeError("zero expression to negative power");
            return InvariantExpr(u);
        }
        std::vector<PowerFactor> factors;
        factors.push_back({rational_.num(), e});
        if (!rational_.den().is_constant()) factors.push_back({rational_.den(), -e});
        RationalFn coeff(u, Rat(1));
        if (rational_.den().is_constant()) {
            const Rat d = rational_.den().constant_value();
            if (d != 1) {
                if (!rat_is_int(e)) throw NonEvaluable("non-integer power of rational constant");
                coeff = RationalFn(u, rat_pow(1 / d, to_long(e)));
            }
        }
        return power_product(std::move(coeff), std::move(factors));
    }
    if (!rational_.is_zero())
        throw Error("power of a mixed rational/power expression is not representable");
    RationalFn coeff(u, Rat(1));
    if (!power_coeff_.is_one()) {
        if (!rat_is_int(e)) throw NonEvaluable("non-integer power of a scaled power product");
        coeff = power_coeff_.pow_int(to_long(e));
    }
    std::vector<PowerFactor> factors = power_factors_;
    for (auto& pf : factors) pf.exponent *= e;
    return power_product(std::move(coeff), std::move(factors));
}

Rat InvariantExpr::eval(std::span<const Rat> point) const {
    if (!log_terms_.empty()) throw NonEvaluable("expression contains formal logarithms");
    Rat total = rational_.eval(point);
    if (!power_factors_.empty()) {
        Rat prod = power_coeff_.eval(point);
        for (const auto& [base, e] : power_factors_) {
            if (!rat_is_int(e)) throw NonEvaluable("non-integer exponent");
            const Rat b = base.eval(point);
            if (b == 0 && e < 0) throw DenominatorVanishes("power-factor base vanishes");
            prod *= rat_pow(b, to_long(e));
        }
        total += prod;
    }
    return total;
}

std::vector<Rat> InvariantExpr::gradient_at(
    std::span<const Rat> point, const std::map<Polynomial, Rat, PolyLess>& log_values) const {
    const std::uint32_t n = universe().size();
    std::vector<Rat> grad(n, Rat(0));

    auto ratfn_pieces = [&](const RationalFn& r) {
        const Rat dv = r.den().eval(point);
        if (dv == 0) throw DenominatorVanishes("denominator vanishes at sample point");
        return std::pair<Rat, Rat>(r.num().eval(point), dv);
    };
    auto ratfn_partial = [&](const RationalFn& r, const std::pair<Rat, Rat>& nd, VarIdx v) -> Rat {
        const Rat nv = r.num().derivative(v).eval(point);
        const Rat dv = r.den().is_constant() ? Rat(0) : r.den().derivative(v).eval(point);
        return Rat((nv * nd.second - nd.first * dv) / (nd.second * nd.second));
    };

    const auto rp = ratfn_pieces(rational_);
    for (VarIdx v = 0; v < n; ++v) grad[v] += ratfn_partial(rational_, rp, v);

    if (!power_factors_.empty()) {
        const auto cp = ratfn_pieces(power_coeff_);
        const Rat cval = cp.first / cp.second;
        std::vector<Rat> bases;
        for (const auto& pf : power_factors_) {
            const Rat b = pf.base.eval(point);
            if (b == 0) throw DenominatorVanishes("power-factor base vanishes at sample point");
            bases.push_back(b);
        }
        for (VarIdx v = 0; v < n; ++v) {
            Rat part = ratfn_partial(power_coeff_, cp, v);
            for (std::size_t i = 0; i < power_factors_.size(); ++i)
                part += cval * power_factors_[i].exponent *
                        power_factors_[i].base.derivative(v).eval(point) / bases[i];
            grad[v] += part; // formal unit evaluates to 1
        }
    }

    for (const auto& lt : log_terms_) {
        auto it = log_values.find(lt.arg);
        if (it == log_values.end()) throw Error("missing formal value for log argument");
        const Rat qv = lt.arg.eval(point);
        if (qv == 0) throw DenominatorVanishes("log argument vanishes at sample point");
        const auto cp = ratfn_pieces(lt.coeff);
        const Rat cval = cp.first / cp.second;
        for (VarIdx v = 0; v < n; ++v) {
            grad[v] += ratfn_partial(lt.coeff, cp, v) * it->second;
            grad[v] += cval * lt.arg.derivative(v).eval(point) / qv;
        }
    }
    return grad;
}

} // namespace triag
