#include "triag/catalog.hpp"

#include <algorithm>

#include "triag/rng.hpp"

namespace triag {

namespace {

Polynomial var_n(const Universe& u, std::uint32_t i, std::uint32_t k) {
    return Polynomial::variable(u, u.index_n(i, k));
}

Polynomial var_x(const Universe& u, std::uint32_t alpha) {
    return Polynomial::variable(u, u.index_x(alpha));
}

} // namespace

Polynomial corner_det(const Universe& u, std::uint32_t mu) {
    const std::uint32_t M = u.M;
    if (mu < 1 || mu > M / 2)
        throw RangeError("corner determinant needs 1 <= mu <= floor(M/2)");
    PolyMatrix q(u, mu, mu);
    for (std::uint32_t i = 1; i <= mu; ++i)
        for (std::uint32_t j = 1; j <= mu; ++j) q.at(i - 1, j - 1) = var_n(u, i, M - mu + j);
    return determinant(q);
}

Polynomial bordered_det(const Universe& u, std::uint32_t mu, std::uint32_t rho) {
    const std::uint32_t M = u.M;
    if (mu < 1 || mu > (M - 1) / 2)
        throw RangeError("bordered determinant needs 1 <= mu <= floor((M-1)/2)");
    if (rho < 1 || rho > M - 2 * mu)
        throw RangeError("bordered determinant needs 1 <= rho <= M - 2*mu");
    PolyMatrix w(u, mu + 1, mu + 1);
    for (std::uint32_t i = 1; i <= mu; ++i) {
        w.at(i - 1, 0) = var_n(u, i, rho + mu);
        for (std::uint32_t j = 1; j <= mu; ++j) w.at(i - 1, j) = var_n(u, i, M - mu + j);
    }
    for (std::uint32_t j = 1; j <= mu; ++j) w.at(mu, j) = var_n(u, rho + mu, M - mu + j);
    return determinant(w);
}

std::vector<InvariantExpr> theorem1_basis(std::uint32_t M) {
    if (M < 2) throw InvalidSize("triangular basis requires M >= 2");
    const Universe u(M, 0);
    std::vector<InvariantExpr> basis;
    for (std::uint32_t mu = 1; mu <= M / 2; ++mu) basis.emplace_back(corner_det(u, mu));
    return basis;
}

VectorField zhat_operator(const LieAlgebra& alg, std::uint32_t mu) {
    const Universe& u = alg.universe();
    const std::uint32_t M = alg.M();
    if (mu < 1 || mu > M / 2) throw RangeError("operator index needs 1 <= mu <= floor(M/2)");
    const auto fields = coadjoint_fields(alg);

    // sum over the replaced column j of the cofactor expansion along it
    VectorField zhat(u);
    for (std::uint32_t j = 1; j <= mu; ++j) {
        for (std::uint32_t i = 1; i <= mu; ++i) {
            if (mu == 1) {
                zhat = zhat + fields[u.index_n(1, M)];
                continue;
            }
            PolyMatrix minor(u, mu - 1, mu - 1);
            std::uint32_t mi = 0;
            for (std::uint32_t r = 1; r <= mu; ++r) {
                if (r == i) continue;
                std::uint32_t mj = 0;
                for (std::uint32_t c = 1; c <= mu; ++c) {
                    if (c == j) continue;
                    minor.at(mi, mj) = var_n(u, r, M - mu + c);
                    ++mj;
                }
                ++mi;
            }
            Polynomial cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            zhat = zhat + fields[u.index_n(i, M - mu + j)].scaled(cof);
        }
    }

    // the matrix-entry derivatives must all cancel
    VectorField residual(u);
    for (const auto& [v, coeff] : zhat.components())
        if (u.var(v).kind == VarId::Kind::N) residual.add_component(v, coeff);
    if (!residual.is_zero())
        throw ResidualNDerivative("combined corner operator keeps matrix-entry derivatives: " +
                                  to_text(residual));
    return zhat;
}

std::string family_name(Family fam) {
    switch (fam) {
        case Family::Theorem1: return "theorem1";
        case Family::Lemma1Case1: return "lemma1-case1";
        case Family::Lemma1Case2: return "lemma1-case2";
        case Family::Lemma1Case3: return "lemma1-case3";
        case Family::Lemma2Case1: return "lemma2-case1";
        case Family::Lemma2Case2a: return "lemma2-case2a";
        case Family::Lemma2Case2b: return "lemma2-case2b";
        case Family::Lemma2Case3: return "lemma2-case3";
        case Family::Lemma3: return "lemma3";
        case Family::Prop1: return "prop1";
        case Family::Prop2Case1: return "prop2-case1";
        case Family::Prop2Case2: return "prop2-case2";
    }
    throw RangeError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"theorem1", Family::Theorem1},       {"lemma1-case1", Family::Lemma1Case1},
        {"lemma1-case2", Family::Lemma1Case2}, {"lemma1-case3", Family::Lemma1Case3},
        {"lemma2-case1", Family::Lemma2Case1}, {"lemma2-case2a", Family::Lemma2Case2a},
        {"lemma2-case2b", Family::Lemma2Case2b}, {"lemma2-case3", Family::Lemma2Case3},
        {"lemma3", Family::Lemma3},           {"prop1", Family::Prop1},
        {"prop2-case1", Family::Prop2Case1},  {"prop2-case2", Family::Prop2Case2},
    };
    for (const auto& [n, f] : table)
        if (name == n) return f;
    return std::nullopt;
}

namespace {

Rat param(const Params& p, const std::string& key, const Rat& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

void reject_unknown(const Params& p, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : p) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ConditionViolated("unknown parameter '" + key + "' for this family");
    }
}

// Coprime integer vector proportional to (a, b), first nonzero entry
// positive; (0, 0) maps to itself.
std::pair<Rat, Rat> coprime_pair(const Rat& a, const Rat& b) {
    if (a == 0 && b == 0) return {Rat(0), Rat(0)};
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    mpz_class A = a.get_num() * (l / a.get_den());
    mpz_class B = b.get_num() * (l / b.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    A /= g;
    B /= g;
    const bool flip = A != 0 ? A < 0 : B < 0;
    if (flip) {
        A = -A;
        B = -B;
    }
    return {Rat(A), Rat(B)};
}

// Power product Z_high^alpha * Z_1^(-beta) with exponents cleared from the
// proportionality (alpha, beta) ~ (c1, c_high).
InvariantExpr eigen_power_product(const Universe& u, std::uint32_t high, const Rat& c1,
                                  const Rat& c_high) {
    auto [e_high, e_low] = coprime_pair(c1, -c_high);
    std::vector<PowerFactor> factors;
    factors.push_back({corner_det(u, high), e_high});
    factors.push_back({corner_det(u, 1), e_low});
    return InvariantExpr::power_product(RationalFn(u, Rat(1)), std::move(factors));
}

std::string member_label(const std::string& base, const Params& p) {
    std::string s = base;
    if (!p.empty()) {
        s += "[";
        bool first = true;
        for (const auto& [k, v] : p) {
            if (!first) s += ",";
            first = false;
            s += k + "=" + rat_to_string(v);
        }
        s += "]";
    }
    return s;
}

CatalogEntry lemma1_case1(const Params& given) {
    reject_unknown(given, {"a12", "a23", "a34", "lam2"});
    const Rat a12 = param(given, "a12", Rat(1));
    const Rat a23 = param(given, "a23", Rat(0));
    const Rat a34 = param(given, "a34", -a12);
    const Rat lam2 = param(given, "lam2", Rat(0));
    const Rat a14 = a12 + a23 + a34;
    if (a23 != 0) throw ConditionViolated("three invariants require a23 = 0");
    if (lam2 != 0) throw ConditionViolated("three invariants require the (23)->(14) slot to vanish");
    if (a14 != 0) throw ConditionViolated("three invariants require a14 = a12 + a23 + a34 = 0");
    if (a12 == 0) throw ConditionViolated("a12 must be nonzero (nilindependence)");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{a12, a23, a34}});
    Params used{{"a12", a12}, {"a23", a23}, {"a34", a34}, {"lam2", lam2}};
    CatalogEntry entry{Family::Lemma1Case1, 4, 1, used, build_L(4, spec), {}, 3,
                       member_label("L(4,1) case 1", used)};
    const Universe u = entry.algebra.universe();
    entry.invariants.emplace_back(corner_det(u, 1));
    entry.invariants.emplace_back(corner_det(u, 2));
    // (n12 n24 + n13 n34) + n14 x / a12
    Polynomial poly = var_n(u, 1, 2) * var_n(u, 2, 4) + var_n(u, 1, 3) * var_n(u, 3, 4);
    entry.invariants.emplace_back(poly + var_n(u, 1, 4) * var_x(u, 1) * (1 / a12));
    return entry;
}

CatalogEntry lemma1_case2(const Params& given) {
    reject_unknown(given, {"a12", "a23", "a34", "lam1", "lam3", "lam2"});
    const Rat a12 = param(given, "a12", Rat(1));
    const Rat a23 = param(given, "a23", Rat(0));
    const Rat a34 = param(given, "a34", Rat(0));
    const Rat lam2 = param(given, "lam2", Rat(0));
    const Rat a14 = a12 + a23 + a34;
    if (lam2 != 0) throw ConditionViolated("this case requires the (23)->(14) slot to vanish");
    if (a12 + a34 == 0 && a23 == 0)
        throw ConditionViolated("this case requires (a12 + a34, a23) != (0, 0)");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{a12, a23, a34}});
    spec.lam_top[0] = param(given, "lam1", Rat(0));
    spec.lam_bottom[0] = param(given, "lam3", Rat(0));
    Params used{{"a12", a12}, {"a23", a23}, {"a34", a34}};
    if (spec.lam_top[0] != 0) used["lam1"] = spec.lam_top[0];
    if (spec.lam_bottom[0] != 0) used["lam3"] = spec.lam_bottom[0];
    CatalogEntry entry{Family::Lemma1Case2, 4, 1, used, build_L(4, spec), {}, 1,
                       member_label("L(4,1) case 2", used)};
    entry.invariants.push_back(eigen_power_product(entry.algebra.universe(), 2, a14, a14 + a23));
    return entry;
}

CatalogEntry lemma1_case3(const Params& given) {
    reject_unknown(given, {"a12", "a23", "a34", "lam2"});
    const Rat a12 = param(given, "a12", Rat(1));
    const Rat a23 = param(given, "a23", Rat(1));
    const Rat a34 = param(given, "a34", -a12);
    const Rat lam2 = param(given, "lam2", Rat(-1));
    if (a12 + a34 != 0) throw ConditionViolated("this case requires a12 + a34 = 0");
    if (lam2 == 0) throw ConditionViolated("this case requires a nonzero (23)->(14) slot");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{a12, a23, a34}});
    spec.lam_mid[0][0] = lam2;
    Params used{{"a12", a12}, {"a23", a23}, {"a34", a34}, {"lam2", lam2}};
    CatalogEntry entry{Family::Lemma1Case3, 4, 1, used, build_L(4, spec), {}, 1,
                       member_label("L(4,1) case 3", used)};
    const Universe u = entry.algebra.universe();
    // a23 Z2 / Z1^2 + lam2 ln Z1
    const Polynomial z1 = corner_det(u, 1);
    InvariantExpr inv(RationalFn(corner_det(u, 2) * a23, z1 * z1));
    inv = inv + InvariantExpr::log_term(RationalFn(u, lam2), z1);
    entry.invariants.push_back(std::move(inv));
    return entry;
}

CatalogEntry lemma2_case1(const Params& given) {
    reject_unknown(given, {"a12", "b23", "lam2"});
    const Rat a12 = param(given, "a12", Rat(1));
    const Rat b23 = param(given, "b23", Rat(1));
    const Rat lam2 = param(given, "lam2", Rat(1));
    if (a12 == 0 || b23 == 0) throw ConditionViolated("a12 and b23 must be nonzero");
    if (lam2 == 0) throw ConditionViolated("this case requires a nonzero (23)->(14) slot");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{a12, Rat(0), -a12}, {Rat(0), b23, Rat(0)}});
    spec.lam_mid[1][0] = lam2;
    Params used{{"a12", a12}, {"b23", b23}, {"lam2", lam2}};
    CatalogEntry entry{Family::Lemma2Case1, 4, 2, used, build_L(4, spec), {}, 2,
                       member_label("L(4,2) case 1", used)};
    const Universe u = entry.algebra.universe();
    const Polynomial z1 = corner_det(u, 1);
    InvariantExpr i1(RationalFn(corner_det(u, 2) * b23, z1 * z1));
    i1 = i1 + InvariantExpr::log_term(RationalFn(u, lam2), z1);
    entry.invariants.push_back(std::move(i1));
    Polynomial num = var_n(u, 1, 2) * var_n(u, 2, 4) + var_n(u, 1, 3) * var_n(u, 3, 4);
    entry.invariants.emplace_back(RationalFn(num, z1) + RationalFn(var_x(u, 1) * (1 / a12)));
    return entry;
}

CatalogEntry lemma2_case2(Family which, const Params& given) {
    reject_unknown(given, {"a12", "a23", "a34", "b12", "b23", "b34"});
    Rat a12, a23, a34, b12, b23, b34;
    if (which == Family::Lemma2Case2a) {
        a12 = param(given, "a12", Rat(1));
        a23 = param(given, "a23", Rat(0));
        a34 = param(given, "a34", -a12);
        b12 = param(given, "b12", Rat(0));
        b23 = param(given, "b23", Rat(1));
        b34 = param(given, "b34", Rat(0));
    } else {
        a12 = param(given, "a12", Rat(1));
        a23 = param(given, "a23", Rat(0));
        a34 = param(given, "a34", Rat(0));
        b12 = param(given, "b12", Rat(0));
        b23 = param(given, "b23", Rat(0));
        b34 = param(given, "b34", Rat(1));
    }
    const Rat a14 = a12 + a23 + a34;
    const Rat b14 = b12 + b23 + b34;
    if (b23 * (a12 + a34) - a23 * (b12 + b34) != 0)
        throw ConditionViolated("two invariants require b23*(a12+a34) - a23*(b12+b34) = 0");
    if (a14 == 0 && b14 == 0)
        throw ConditionViolated("this case requires (a14, b14) != (0, 0)");

    CharMatrixSpec spec =
        CharMatrixSpec::diagonal(4, {{a12, a23, a34}, {b12, b23, b34}});
    Params used{{"a12", a12}, {"a23", a23}, {"a34", a34},
                {"b12", b12}, {"b23", b23}, {"b34", b34}};
    CatalogEntry entry{which, 4, 2, used, build_L(4, spec), {}, 2,
                       member_label(which == Family::Lemma2Case2a ? "L(4,2) case 2a" : "L(4,2) case 2b",
                                    used)};
    const Universe u = entry.algebra.universe();

    // exponents from whichever eigenvalue row is nonzero
    if (a14 != 0 || a14 + a23 != 0)
        entry.invariants.push_back(eigen_power_product(u, 2, a14, a14 + a23));
    else
        entry.invariants.push_back(eigen_power_product(u, 2, b14, b14 + b23));

    const Rat a13 = a12 + a23, b13 = b12 + b23;
    Polynomial num = (var_n(u, 1, 2) * var_n(u, 2, 4) + var_n(u, 1, 3) * var_n(u, 3, 4)) *
                     (a34 * b13 - b34 * a13);
    InvariantExpr i2(RationalFn(std::move(num), corner_det(u, 1)));
    i2 = i2 + InvariantExpr(var_x(u, 2) * a14 - var_x(u, 1) * b14);
    entry.invariants.push_back(std::move(i2));
    return entry;
}

CatalogEntry lemma2_case3(const Params& given) {
    reject_unknown(given, {"a12", "b23", "sigma12"});
    const Rat a12 = param(given, "a12", Rat(1));
    const Rat b23 = param(given, "b23", Rat(1));
    const Rat sigma12 = param(given, "sigma12", Rat(1));
    if (a12 == 0 || b23 == 0) throw ConditionViolated("a12 and b23 must be nonzero");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(4, {{a12, Rat(0), -a12}, {Rat(0), b23, -b23}});
    spec.sigma[0][1] = sigma12;
    spec.sigma[1][0] = -sigma12;
    Params used{{"a12", a12}, {"b23", b23}, {"sigma12", sigma12}};
    CatalogEntry entry{Family::Lemma2Case3, 4, 2, used, build_L(4, spec), {}, 2,
                       member_label("L(4,2) case 3", used)};
    const Universe u = entry.algebra.universe();
    const Polynomial z1 = corner_det(u, 1);
    entry.invariants.emplace_back(z1);
    // n12 n24 + n13 n34 + Z1 x1 / a12 + sigma12/(a12 b23) Z1^2 ln Z2
    InvariantExpr i2(var_n(u, 1, 2) * var_n(u, 2, 4) + var_n(u, 1, 3) * var_n(u, 3, 4) +
                     z1 * var_x(u, 1) * (1 / a12));
    if (sigma12 != 0)
        i2 = i2 + InvariantExpr::log_term(RationalFn(z1 * z1 * (sigma12 / (a12 * b23))),
                                          corner_det(u, 2));
    entry.invariants.push_back(std::move(i2));
    return entry;
}

CatalogEntry lemma3(const Params& given) {
    reject_unknown(given, {});
    CatalogEntry entry{Family::Lemma3, 4, 3, {}, build_L_full_rank(4), {}, 1, "L(4,3)"};
    const Universe u = entry.algebra.universe();
    Polynomial num = var_n(u, 1, 2) * var_n(u, 2, 4) + var_n(u, 1, 3) * var_n(u, 3, 4);
    InvariantExpr inv(RationalFn(std::move(num), corner_det(u, 1)));
    inv = inv + InvariantExpr(var_x(u, 1) - var_x(u, 3));
    entry.invariants.push_back(std::move(inv));
    return entry;
}

} // namespace

CatalogEntry lemma_invariants(Family which, const Params& params) {
    switch (which) {
        case Family::Lemma1Case1: return lemma1_case1(params);
        case Family::Lemma1Case2: return lemma1_case2(params);
        case Family::Lemma1Case3: return lemma1_case3(params);
        case Family::Lemma2Case1: return lemma2_case1(params);
        case Family::Lemma2Case2a: return lemma2_case2(Family::Lemma2Case2a, params);
        case Family::Lemma2Case2b: return lemma2_case2(Family::Lemma2Case2b, params);
        case Family::Lemma2Case3: return lemma2_case3(params);
        case Family::Lemma3: return lemma3(params);
        default:
            throw RangeError("lemma_invariants handles the M = 4 families only");
    }
}

CatalogEntry prop1_invariants(std::uint32_t M) {
    if (M < 3) throw InvalidSize("the maximal extension requires M >= 3");
    CatalogEntry entry{Family::Prop1, M, M - 1, {}, build_L_full_rank(M), {}, (M - 1) / 2,
                       "L(" + std::to_string(M) + "," + std::to_string(M - 1) + ")"};
    const Universe u = entry.algebra.universe();
    for (std::uint32_t mu = 1; mu <= (M - 1) / 2; ++mu) {
        Polynomial sum_w(u);
        for (std::uint32_t rho = 1; rho <= M - 2 * mu; ++rho) sum_w += bordered_det(u, mu, rho);
        if (mu % 2 == 0) sum_w = -sum_w;
        InvariantExpr inv(RationalFn(std::move(sum_w), corner_det(u, mu)));
        inv = inv + InvariantExpr(var_x(u, mu) - var_x(u, M - mu));
        entry.invariants.push_back(std::move(inv));
    }
    return entry;
}

CatalogEntry prop2_invariants(std::uint32_t M, const std::vector<Rat>& superdiag) {
    if (M < 3) throw InvalidSize("the one-element extension requires M >= 3");
    if (superdiag.size() != M - 1)
        throw ShapeMismatch("superdiagonal must list M-1 entries");

    CharMatrixSpec spec = CharMatrixSpec::diagonal(M, {superdiag});
    Params used;
    for (std::uint32_t i = 1; i < M; ++i)
        used["a" + std::to_string(i) + std::to_string(i + 1)] = superdiag[i - 1];

    bool mirror = true;
    for (std::uint32_t i = 1; i <= M / 2; ++i)
        if (superdiag[i - 1] + superdiag[M - i - 1] != 0) mirror = false;

    const Family fam = mirror ? Family::Prop2Case1 : Family::Prop2Case2;
    const std::uint32_t count = mirror ? M / 2 + 1 : M / 2 - 1;
    CatalogEntry entry{fam, M, 1, used, build_L(M, spec), {}, count,
                       member_label("L(" + std::to_string(M) + ",1)", used)};
    const Universe u = entry.algebra.universe();

    // eigenvalue of Z_mu under the non-nilpotent operator
    auto eigenvalue = [&](std::uint32_t mu) {
        Rat c(0);
        for (std::uint32_t k = 1; k <= mu; ++k) c += spec.diag_entry(1, k, M + 1 - k);
        return c;
    };

    if (mirror) {
        for (std::uint32_t mu = 1; mu <= M / 2; ++mu)
            entry.invariants.emplace_back(corner_det(u, mu));
        RationalFn acc(u);
        for (std::uint32_t mu = 1; mu <= (M - 1) / 2; ++mu) {
            Polynomial sum_w(u);
            for (std::uint32_t rho = 1; rho <= M - 2 * mu; ++rho) sum_w += bordered_det(u, mu, rho);
            sum_w = sum_w * superdiag[mu - 1];
            if (mu % 2 == 0) sum_w = -sum_w;
            acc = acc + RationalFn(std::move(sum_w), corner_det(u, mu));
        }
        entry.invariants.emplace_back(acc + RationalFn(var_x(u, 1)));
    } else {
        const Rat c1 = eigenvalue(1);
        if (c1 == 0 && M / 2 - 1 >= 2)
            throw DegenerateExponent(
                "a_{1M} = 0 collapses the power-product basis to powers of the corner entry");
        for (std::uint32_t mu = 1; mu + 1 <= M / 2; ++mu) {
            const Rat c_high = eigenvalue(mu + 1);
            if (c_high == 0)
                throw DegenerateExponent("exponent ratio undefined: the eigenvalue sum for Z_" +
                                         std::to_string(mu + 1) + " vanishes");
            entry.invariants.push_back(eigen_power_product(u, mu + 1, c1, c_high));
        }
    }
    return entry;
}

Certificate verify_invariant(const LieAlgebra& alg, const InvariantExpr& e, ExecMode exec) {
    require_same(alg.universe(), e.universe());
    const auto fields = coadjoint_fields(alg);
    Certificate cert;
    cert.algebra = alg.name();
    cert.invariant = to_text(e);
    cert.per_generator.resize(fields.size());
    parallel_for(exec, fields.size(), [&](std::size_t i) {
        GeneratorCheck check;
        check.generator = alg.universe().label(static_cast<VarIdx>(i));
        InvariantExpr derived = fields[i].apply(e);
        check.zero = derived.is_zero();
        if (!check.zero) check.residual = to_text(derived);
        cert.per_generator[i] = std::move(check);
    });
    cert.pass = std::all_of(cert.per_generator.begin(), cert.per_generator.end(),
                            [](const GeneratorCheck& c) { return c.zero; });
    return cert;
}

std::uint32_t jacobian_rank(const std::vector<InvariantExpr>& invariants,
                            const JacobianOptions& opts) {
    if (invariants.empty()) return 0;
    if (opts.trials < 1) throw RangeError("jacobian sampling needs at least one trial");
    const Universe u = invariants.front().universe();
    for (const auto& inv : invariants) require_same(u, inv.universe());

    std::map<Polynomial, Rat, PolyLess> log_args;
    for (const auto& inv : invariants)
        for (const auto& lt : inv.log_terms()) log_args.emplace(lt.arg, Rat(0));

    std::vector<std::size_t> ranks(opts.trials, 0);
    parallel_for(opts.exec, opts.trials, [&](std::size_t t) {
        Rng rng = Rng::stream(opts.seed ^ 0x6a61636fULL, t);
        for (std::uint32_t attempt = 0;; ++attempt) {
            if (attempt >= opts.max_resamples)
                throw Error("no usable sample point after " + std::to_string(opts.max_resamples) +
                            " draws");
            try {
                std::vector<Rat> point(u.size());
                for (auto& c : point) c = rng.rational(1000000, 1000);
                auto log_values = log_args;
                for (auto& [arg, value] : log_values) value = rng.rational(1000000, 1000);
                std::vector<std::vector<Rat>> jac;
                for (const auto& inv : invariants) jac.push_back(inv.gradient_at(point, log_values));
                ranks[t] = rational_rank(std::move(jac));
                return;
            } catch (const DenominatorVanishes&) {
                continue;
            }
        }
    });
    return static_cast<std::uint32_t>(*std::max_element(ranks.begin(), ranks.end()));
}

CofactorReport cofactor_annihilation_check(std::uint32_t M) {
    if (M < 4) throw InvalidSize("the reduced-operator check requires M >= 4");
    const Universe u(M, 0);
    const std::uint32_t p = M / 2;
    const bool odd = M % 2 == 1;
    // first column of the corner block after the first elimination stage
    const std::uint32_t col_lo = odd ? p + 2 : p + 1;

    std::vector<std::pair<std::string, VectorField>> ops;
    // row-replacing family inside the corner block rows
    for (std::uint32_t i = 1; i < p; ++i)
        for (std::uint32_t k = i + 1; k <= p; ++k) {
            VectorField f(u);
            for (std::uint32_t b = col_lo; b <= M; ++b)
                f.add_component(u.index_n(k, b), var_n(u, i, b));
            ops.push_back({"row(" + std::to_string(i) + "," + std::to_string(k) + ")", f});
        }
    // column-replacing family below the corner block
    for (std::uint32_t i = col_lo; i < M; ++i)
        for (std::uint32_t k = i + 1; k <= M; ++k) {
            VectorField f(u);
            for (std::uint32_t a = 1; a <= p; ++a)
                f.add_component(u.index_n(a, i), -var_n(u, a, k));
            ops.push_back({"col(" + std::to_string(i) + "," + std::to_string(k) + ")", f});
        }

    CofactorReport report;
    report.M = M;
    for (const auto& [name, f] : ops)
        for (std::uint32_t mu = 1; mu <= p; ++mu) {
            const bool zero = f.apply(corner_det(u, mu)).is_zero();
            report.checks.push_back({name, mu, zero});
        }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CofactorCheck& c) { return c.zero; });
    return report;
}

} // namespace triag
