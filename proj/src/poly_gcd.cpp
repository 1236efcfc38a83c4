#include <algorithm>
#include <vector>

#include "triag/polynomial.hpp"

namespace triag {

namespace {

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = a.try_divide(b);
    if (!q) throw Error("internal: expected exact polynomial division");
    return *q;
}

// Coefficients of `p` viewed as a univariate polynomial in `v` over the
// remaining variables; index = degree in v.
std::vector<Polynomial> coeffs_in(const Polynomial& p, VarIdx v) {
    std::vector<Polynomial> out(p.degree_in(v) + 1, Polynomial(p.universe()));
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m.exponent(v);
        Monomial rest = *m.divide(Monomial::var(v, e));
        out[e].add_term(rest, c);
    }
    return out;
}

// gcd of the v-coefficients (the content over the coefficient ring).
Polynomial content_in(const Polynomial& p, VarIdx v) {
    Polynomial g(p.universe());
    for (const Polynomial& c : coeffs_in(p, v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable v; deg_v(a) >= deg_v(b) > 0.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, VarIdx v) {
    const std::uint32_t db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    const Polynomial& blc = bc[db];
    while (!a.is_zero()) {
        const std::uint32_t da = a.degree_in(v);
        if (da < db) break;
        auto ac = coeffs_in(a, v);
        const Polynomial& alc = ac[da];
        a = a * blc - b * alc.mul_monomial(Monomial::var(v, da - db), Rat(1));
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.primitive().second;
    if (b.is_zero()) return a.primitive().second;
    const Universe u = a.universe();
    require_same(u, b.universe());

    Polynomial pa = a.primitive().second;
    Polynomial pb = b.primitive().second;
    if (pa.is_constant() || pb.is_constant()) return Polynomial::constant(u, 1);
    if (pa == pb) return pa;

    const Monomial ma = pa.monomial_content();
    const Monomial mb = pb.monomial_content();
    const Monomial mg = Monomial::gcd(ma, mb);
    // strip monomial contents
    {
        Polynomial sa(u), sb(u);
        for (const auto& [m, c] : pa.terms()) sa.add_term(*m.divide(ma), c);
        for (const auto& [m, c] : pb.terms()) sb.add_term(*m.divide(mb), c);
        pa = std::move(sa);
        pb = std::move(sb);
    }

    Polynomial result(u);
    if (pa.is_constant() || pb.is_constant()) {
        result = Polynomial::constant(u, 1);
    } else {
        // main variable: common support, smallest max-degree
        std::vector<VarIdx> common;
        auto sa = pa.support();
        for (VarIdx v : pb.support())
            if (sa.count(v)) common.push_back(v);
        if (common.empty()) {
            result = Polynomial::constant(u, 1);
        } else {
            VarIdx main = common.front();
            std::uint32_t best = UINT32_MAX;
            for (VarIdx v : common) {
                const std::uint32_t d = std::max(pa.degree_in(v), pb.degree_in(v));
                if (d < best) best = d, main = v;
            }
            Polynomial ca = content_in(pa, main);
            Polynomial cb = content_in(pb, main);
            Polynomial cg = poly_gcd(ca, cb);
            Polynomial fa = divide_exact(pa, ca);
            Polynomial fb = divide_exact(pb, cb);
            if (fa.degree_in(main) < fb.degree_in(main)) std::swap(fa, fb);
            // primitive pseudo-remainder sequence
            for (;;) {
                Polynomial r = pseudo_rem(fa, fb, main);
                if (r.is_zero()) break;
                if (r.degree_in(main) == 0) {
                    fb = Polynomial::constant(u, 1);
                    break;
                }
                fa = std::move(fb);
                Polynomial cr = content_in(r, main);
                fb = divide_exact(r, cr);
            }
            Polynomial g = fb.is_constant() ? Polynomial::constant(u, 1) : fb.primitive().second;
            result = cg * g;
        }
    }

    Polynomial full = result.mul_monomial(mg, Rat(1)).primitive().second;
    if (!a.try_divide(full) || !b.try_divide(full))
        throw Error("internal: gcd candidate fails trial division");
    return full;
}

} // namespace triag
