#include "triag/lie_algebra.hpp"

#include <algorithm>

#include "triag/rng.hpp"

namespace triag {

namespace {

constexpr std::uint32_t kExhaustiveJacobiDim = 30;
constexpr std::uint32_t kRandomJacobiTriples = 500;

using SparseMat = std::map<std::pair<std::uint32_t, std::uint32_t>, Rat>;

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b, std::uint32_t n) {
    std::vector<std::vector<std::pair<std::uint32_t, Rat>>> rows_b(n);
    for (const auto& [rc, v] : b) rows_b[rc.first].push_back({rc.second, v});
    SparseMat out;
    for (const auto& [rc, v] : a)
        for (const auto& [c2, v2] : rows_b[rc.second]) {
            Rat& slot = out[{rc.first, c2}];
            slot += v * v2;
            if (slot == 0) out.erase({rc.first, c2});
        }
    return out;
}

} // namespace

CharMatrixSpec CharMatrixSpec::diagonal(std::uint32_t M, std::vector<std::vector<Rat>> fd) {
    CharMatrixSpec s;
    s.M = M;
    s.f = static_cast<std::uint32_t>(fd.size());
    s.free_diag = std::move(fd);
    if (M >= 3) {
        s.lam_top.assign(s.f, Rat(0));
        s.lam_bottom.assign(s.f, Rat(0));
    }
    if (M >= 4) s.lam_mid.assign(s.f, std::vector<Rat>(M - 3, Rat(0)));
    s.sigma.assign(s.f, std::vector<Rat>(s.f, Rat(0)));
    return s;
}

Rat CharMatrixSpec::diag_entry(std::uint32_t alpha, std::uint32_t i, std::uint32_t k) const {
    if (alpha < 1 || alpha > f || i < 1 || k <= i || k > M)
        throw RangeError("characteristic matrix index out of range");
    Rat a(0);
    for (std::uint32_t p = i; p < k; ++p) a += free_diag[alpha - 1][p - 1];
    return a;
}

Rat CharMatrixSpec::sigma_entry(std::uint32_t alpha, std::uint32_t beta) const {
    if (sigma.empty()) return Rat(0);
    return sigma[alpha - 1][beta - 1];
}

bool CharMatrixSpec::all_diagonal() const {
    for (const Rat& v : lam_top)
        if (v != 0) return false;
    for (const Rat& v : lam_bottom)
        if (v != 0) return false;
    for (const auto& row : lam_mid)
        for (const Rat& v : row)
            if (v != 0) return false;
    return true;
}

std::vector<std::vector<Rat>> CharMatrixSpec::full_matrix(std::uint32_t alpha) const {
    const Universe u(M, 0);
    const std::uint32_t r = u.nil_dim();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r, Rat(0)));
    for (std::uint32_t i = 1; i < M; ++i)
        for (std::uint32_t k = i + 1; k <= M; ++k)
            a[u.index_n(i, k)][u.index_n(i, k)] = diag_entry(alpha, i, k);
    if (M >= 3) {
        a[u.index_n(1, 2)][u.index_n(2, M)] = lam_top[alpha - 1];
        a[u.index_n(M - 1, M)][u.index_n(1, M - 1)] = lam_bottom[alpha - 1];
    }
    for (std::uint32_t j = 2; j + 2 <= M; ++j)
        a[u.index_n(j, j + 1)][u.index_n(1, M)] = lam_mid[alpha - 1][j - 2];
    return a;
}

void CharMatrixSpec::validate() const {
    if (M < 2) throw InvalidSize("characteristic matrices require M >= 2");
    if (f < 1) throw InvalidSize("characteristic spec requires f >= 1");
    if (free_diag.size() != f) throw ShapeMismatch("free_diag must list f rows");
    for (const auto& row : free_diag)
        if (row.size() != M - 1) throw ShapeMismatch("free_diag rows must have M-1 entries");
    if (M >= 3 && (lam_top.size() != f || lam_bottom.size() != f))
        throw ShapeMismatch("off-diagonal slot vectors must have f entries");
    if (M >= 4) {
        if (lam_mid.size() != f) throw ShapeMismatch("lam_mid must list f rows");
        for (const auto& row : lam_mid)
            if (row.size() != M - 3) throw ShapeMismatch("lam_mid rows must have M-3 entries");
    }
    if (!sigma.empty()) {
        if (sigma.size() != f) throw ShapeMismatch("sigma must be f x f");
        for (const auto& row : sigma)
            if (row.size() != f) throw ShapeMismatch("sigma must be f x f");
        for (std::uint32_t a = 0; a < f; ++a)
            for (std::uint32_t b = 0; b < f; ++b)
                if (sigma[a][b] != -sigma[b][a])
                    throw CanonicalFormViolation("sigma must be antisymmetric at (" +
                                                 std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                                 ")");
    }

    // an off-diagonal slot (ik)->(ab) may be occupied only under the
    // resonance a^beta_{ik} = a^beta_{ab} for every beta; how many slots can
    // be occupied simultaneously is a classification detail that is not
    // validated here
    auto check_slot = [&](const Rat& value, std::uint32_t i, std::uint32_t k, std::uint32_t a,
                          std::uint32_t b) {
        if (value == 0) return;
        for (std::uint32_t beta = 1; beta <= f; ++beta)
            if (diag_entry(beta, i, k) != diag_entry(beta, a, b))
                throw CanonicalFormViolation(
                    "off-diagonal slot (" + std::to_string(i) + std::to_string(k) + ")->(" +
                    std::to_string(a) + std::to_string(b) + ") requires a_" + std::to_string(i) +
                    std::to_string(k) + " = a_" + std::to_string(a) + std::to_string(b) +
                    " for every characteristic matrix (violated at alpha=" + std::to_string(beta) +
                    ")");
    };
    if (M >= 3) {
        for (std::uint32_t alpha = 1; alpha <= f; ++alpha) {
            check_slot(lam_top[alpha - 1], 1, 2, 2, M);
            check_slot(lam_bottom[alpha - 1], M - 1, M, 1, M - 1);
        }
    }
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha)
        for (std::uint32_t j = 2; j + 2 <= M; ++j)
            if (M >= 4) check_slot(lam_mid[alpha - 1][j - 2], j, j + 1, 1, M);

    // sigma constants need every a^gamma_{1M} to vanish
    bool sigma_nonzero = false;
    for (const auto& row : sigma)
        for (const Rat& v : row)
            if (v != 0) sigma_nonzero = true;
    if (sigma_nonzero)
        for (std::uint32_t gamma = 1; gamma <= f; ++gamma)
            if (diag_entry(gamma, 1, M) != 0)
                throw CanonicalFormViolation("sigma requires a_{1M} = 0 for every matrix "
                                             "(violated at alpha=" +
                                             std::to_string(gamma) + ")");

    // for f >= 2 the characteristic matrices must commute
    if (f >= 2) {
        const Universe u(M, 0);
        const std::uint32_t r = u.nil_dim();
        std::vector<SparseMat> mats(f);
        for (std::uint32_t alpha = 1; alpha <= f; ++alpha) {
            auto dense = full_matrix(alpha);
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t j = 0; j < r; ++j)
                    if (dense[i][j] != 0) mats[alpha - 1][{i, j}] = dense[i][j];
        }
        for (std::uint32_t a = 0; a < f; ++a)
            for (std::uint32_t b = a + 1; b < f; ++b) {
                SparseMat ab = sparse_mul(mats[a], mats[b], r);
                SparseMat ba = sparse_mul(mats[b], mats[a], r);
                if (ab != ba)
                    throw CanonicalFormViolation("characteristic matrices " + std::to_string(a + 1) +
                                                 " and " + std::to_string(b + 1) +
                                                 " do not commute");
            }
    }

    // nilindependence: the diagonals must be linearly independent
    std::vector<std::vector<Rat>> diags;
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha) {
        std::vector<Rat> d;
        for (std::uint32_t i = 1; i < M; ++i)
            for (std::uint32_t k = i + 1; k <= M; ++k) d.push_back(diag_entry(alpha, i, k));
        diags.push_back(std::move(d));
    }
    if (rational_rank(diags) != f)
        throw NilindependenceViolation(
            "characteristic matrices are linearly nildependent (diagonal rank < f)");
}

std::vector<BracketTerm> LieAlgebra::bracket(std::uint32_t i, std::uint32_t j) const {
    if (i == j) return {};
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return {};
    std::vector<BracketTerm> terms = it->second;
    if (flip)
        for (auto& t : terms) t.c = -t.c;
    return terms;
}

void LieAlgebra::validate_jacobi() const {
    const std::uint32_t n = dim();
    auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        std::map<std::uint32_t, Rat> acc;
        auto add_double = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            for (const auto& t : bracket(x, y))
                for (const auto& s : bracket(t.k, z)) {
                    Rat& slot = acc[s.k];
                    slot += t.c * s.c;
                    if (slot == 0) acc.erase(s.k);
                }
        };
        add_double(a, b, c);
        add_double(b, c, a);
        add_double(c, a, b);
        if (!acc.empty())
            throw JacobiViolation("Jacobi identity fails on triple (" + u_.label(a) + ", " +
                                  u_.label(b) + ", " + u_.label(c) + ")");
    };

    if (n <= kExhaustiveJacobiDim) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b)
                for (std::uint32_t c = b + 1; c < n; ++c) check_triple(a, b, c);
    } else {
        Rng rng(0x6a61636f62ULL ^ n);
        for (std::uint32_t t = 0; t < kRandomJacobiTriples; ++t) {
            const auto a = static_cast<std::uint32_t>(rng.uniform(0, n - 1));
            const auto b = static_cast<std::uint32_t>(rng.uniform(0, n - 1));
            const auto c = static_cast<std::uint32_t>(rng.uniform(0, n - 1));
            if (a == b || b == c || a == c) continue;
            check_triple(a, b, c);
        }
    }
}

LieAlgebra LieAlgebra::from_brackets(Universe u, BracketMap brackets, std::string name,
                                     std::optional<CharMatrixSpec> spec) {
    for (auto& [ij, terms] : brackets) {
        if (ij.first >= ij.second || ij.second >= u.size())
            throw RangeError("bracket indices out of range");
        std::sort(terms.begin(), terms.end(),
                  [](const BracketTerm& a, const BracketTerm& b) { return a.k < b.k; });
        for (const auto& t : terms)
            if (t.k >= u.size() || t.c == 0) throw RangeError("malformed bracket term");
    }
    std::erase_if(brackets, [](const auto& kv) { return kv.second.empty(); });
    LieAlgebra alg(u, std::move(brackets), std::move(name), std::move(spec));
    alg.validate_jacobi();
    return alg;
}

LieAlgebra build_T(std::uint32_t M) {
    if (M < 2) throw InvalidSize("triangular algebra requires M >= 2");
    const Universe u(M, 0);
    BracketMap b;
    // [N_ik, N_ab] = delta_{k,a} N_ib - delta_{b,i} N_ak
    for (std::uint32_t first = 0; first < u.nil_dim(); ++first)
        for (std::uint32_t second = first + 1; second < u.nil_dim(); ++second) {
            const VarId vi = u.var(first), vj = u.var(second);
            std::vector<BracketTerm> terms;
            if (vi.k == vj.i) terms.push_back({u.index_n(vi.i, vj.k), Rat(1)});
            if (vj.k == vi.i) terms.push_back({u.index_n(vj.i, vi.k), Rat(-1)});
            if (!terms.empty()) b[{first, second}] = std::move(terms);
        }
    LieAlgebra alg(u, std::move(b), "T(" + std::to_string(M) + ")", std::nullopt);
    alg.validate_jacobi();
    return alg;
}

LieAlgebra build_L(std::uint32_t M, CharMatrixSpec spec) {
    if (M < 2) throw InvalidSize("solvable extension requires M >= 2");
    if (spec.M != M) throw ShapeMismatch("spec M does not match");
    spec.validate();
    const std::uint32_t f = spec.f;
    const Universe u(M, f);

    const LieAlgebra nilradical = build_T(M);
    BracketMap b = nilradical.brackets();

    // [X^alpha, N_ik] = a^alpha_ik N_ik + Gamma^alpha_ik; stored flipped as
    // [N_ik, X^alpha] = -(...)
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha) {
        const std::uint32_t xi = u.index_x(alpha);
        for (std::uint32_t i = 1; i < M; ++i)
            for (std::uint32_t k = i + 1; k <= M; ++k) {
                std::vector<BracketTerm> terms;
                const Rat a = spec.diag_entry(alpha, i, k);
                if (a != 0) terms.push_back({u.index_n(i, k), -a});
                if (M >= 3 && i == 1 && k == 2 && spec.lam_top[alpha - 1] != 0)
                    terms.push_back({u.index_n(2, M), -spec.lam_top[alpha - 1]});
                if (M >= 4 && k == i + 1 && i >= 2 && i + 2 <= M &&
                    spec.lam_mid[alpha - 1][i - 2] != 0)
                    terms.push_back({u.index_n(1, M), -spec.lam_mid[alpha - 1][i - 2]});
                if (M >= 3 && i == M - 1 && k == M && spec.lam_bottom[alpha - 1] != 0)
                    terms.push_back({u.index_n(1, M - 1), -spec.lam_bottom[alpha - 1]});
                if (!terms.empty()) b[{u.index_n(i, k), xi}] = std::move(terms);
            }
    }

    // [X^alpha, X^beta] = sigma^{alpha beta} N_1M
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha)
        for (std::uint32_t beta = alpha + 1; beta <= f; ++beta) {
            const Rat s = spec.sigma_entry(alpha, beta);
            if (s != 0) b[{u.index_x(alpha), u.index_x(beta)}] = {{u.index_n(1, M), s}};
        }

    std::string name = "L(" + std::to_string(M) + "," + std::to_string(f) + ")";
    LieAlgebra alg(u, std::move(b), std::move(name), std::move(spec));
    alg.validate_jacobi();
    return alg;
}

LieAlgebra build_L_full_rank(std::uint32_t M) {
    if (M < 3) throw InvalidSize("the full-rank extension requires M >= 3");
    const std::uint32_t f = M - 1;
    std::vector<std::vector<Rat>> fd(f, std::vector<Rat>(M - 1, Rat(0)));
    // a^alpha_{ik} = 1 iff i <= alpha < k; on the superdiagonal this puts a
    // single 1 in slot alpha
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha) fd[alpha - 1][alpha - 1] = Rat(1);
    return build_L(M, CharMatrixSpec::diagonal(M, std::move(fd)));
}

bool nilindependent(const std::vector<std::vector<std::vector<Rat>>>& mats) {
    if (mats.empty()) return true;
    const std::size_t n = mats.front().size();
    std::vector<std::vector<Rat>> diags;
    for (const auto& m : mats) {
        if (m.size() != n) throw ShapeMismatch("matrices must share one size");
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i].size() != n) throw ShapeMismatch("matrices must be square");
            for (std::size_t j = 0; j < i; ++j)
                if (m[i][j] != 0) throw ShapeMismatch("matrices must be upper triangular");
        }
        std::vector<Rat> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = m[i][i];
        diags.push_back(std::move(d));
    }
    // a triangular matrix is nilpotent iff its diagonal vanishes, so linear
    // nilindependence reduces to independence of the diagonals
    return rational_rank(diags) == mats.size();
}

namespace {

// Closed triangular form of the operator attached to basis element `idx`.
VectorField closed_form_field(const LieAlgebra& alg, std::uint32_t idx) {
    const Universe& u = alg.universe();
    const std::uint32_t M = alg.M();
    VectorField field(u);
    const VarId v = u.var(idx);
    const auto& spec = alg.char_spec();

    auto gamma = [&](std::uint32_t alpha, std::uint32_t i, std::uint32_t k) -> Polynomial {
        Polynomial g(u);
        if (!spec) return g;
        if (M >= 3 && i == 1 && k == 2 && spec->lam_top[alpha - 1] != 0)
            g += Polynomial::variable(u, u.index_n(2, M)) * spec->lam_top[alpha - 1];
        if (M >= 4 && k == i + 1 && i >= 2 && i + 2 <= M && spec->lam_mid[alpha - 1][i - 2] != 0)
            g += Polynomial::variable(u, u.index_n(1, M)) * spec->lam_mid[alpha - 1][i - 2];
        if (M >= 3 && i == M - 1 && k == M && spec->lam_bottom[alpha - 1] != 0)
            g += Polynomial::variable(u, u.index_n(1, M - 1)) * spec->lam_bottom[alpha - 1];
        return g;
    };

    if (v.kind == VarId::Kind::N) {
        const std::uint32_t i = v.i, k = v.k;
        for (std::uint32_t b = k + 1; b <= M; ++b)
            field.add_component(u.index_n(k, b), Polynomial::variable(u, u.index_n(i, b)));
        for (std::uint32_t a = 1; a < i; ++a)
            field.add_component(u.index_n(a, i), -Polynomial::variable(u, u.index_n(a, k)));
        if (spec)
            for (std::uint32_t alpha = 1; alpha <= alg.f(); ++alpha) {
                Polynomial coeff =
                    Polynomial::variable(u, u.index_n(i, k)) * spec->diag_entry(alpha, i, k) +
                    gamma(alpha, i, k);
                field.add_component(u.index_x(alpha), -coeff);
            }
        return field;
    }

    if (!spec) throw Error("internal: closed form for x-generator needs a characteristic spec");
    const std::uint32_t alpha = v.i;
    for (std::uint32_t i = 1; i < M; ++i)
        for (std::uint32_t k = i + 1; k <= M; ++k) {
            Polynomial coeff =
                Polynomial::variable(u, u.index_n(i, k)) * spec->diag_entry(alpha, i, k) +
                gamma(alpha, i, k);
            field.add_component(u.index_n(i, k), coeff);
        }
    for (std::uint32_t beta = 1; beta <= alg.f(); ++beta) {
        const Rat s = spec->sigma_entry(alpha, beta);
        if (s != 0)
            field.add_component(u.index_x(beta), Polynomial::variable(u, u.index_n(1, M)) * s);
    }
    return field;
}

} // namespace

std::vector<VectorField> coadjoint_fields(const LieAlgebra& alg) {
    const Universe& u = alg.universe();
    const std::uint32_t n = alg.dim();
    std::vector<VectorField> fields(n, VectorField(u));
    for (const auto& [ij, terms] : alg.brackets()) {
        const auto [i, j] = ij;
        for (const auto& t : terms) {
            const Polynomial y = Polynomial::variable(u, t.k);
            fields[i].add_component(j, y * t.c);
            fields[j].add_component(i, y * (-t.c));
        }
    }

    // cross-check against the closed triangular forms whenever available
    const bool closed_known = alg.f() == 0 || alg.char_spec().has_value();
    if (closed_known)
        for (std::uint32_t i = 0; i < n; ++i)
            if (!(fields[i] == closed_form_field(alg, i)))
                throw Error("internal: coadjoint operator disagrees with its closed form at " +
                            u.label(i));
    return fields;
}

PolyMatrix structure_matrix(const LieAlgebra& alg) {
    const Universe& u = alg.universe();
    const std::uint32_t n = alg.dim();
    PolyMatrix s(u, n, n);
    for (const auto& [ij, terms] : alg.brackets()) {
        Polynomial entry(u);
        for (const auto& t : terms) entry += Polynomial::variable(u, t.k) * t.c;
        s.at(ij.second, ij.first) = -entry;
        s.at(ij.first, ij.second) = std::move(entry);
    }
    if (!s.is_antisymmetric()) throw Error("internal: structure matrix not antisymmetric");
    return s;
}

std::uint32_t generic_rank(const LieAlgebra& alg, const RankOptions& opts) {
    if (opts.trials < 1) throw RangeError("rank sampling needs at least one trial");
    const PolyMatrix s = structure_matrix(alg);
    const std::uint32_t n = alg.dim();

    std::vector<std::size_t> ranks(opts.trials, 0);
    parallel_for(opts.exec, opts.trials, [&](std::size_t t) {
        Rng rng = Rng::stream(opts.seed, t);
        std::vector<Rat> point(n);
        for (auto& c : point) c = rng.rational(1000000, 1000);
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (!s.at(i, j).is_zero()) m[i][j] = s.at(i, j).eval(point);
        const std::size_t r = rational_rank(std::move(m));
        if (r % 2 != 0) throw Error("internal: antisymmetric matrix with odd rank");
        ranks[t] = r;
    });
    const std::size_t numeric = *std::max_element(ranks.begin(), ranks.end());

    const bool confirm = opts.confirm == RankOptions::Confirm::On ||
                         (opts.confirm == RankOptions::Confirm::Auto && n <= opts.confirm_dim_limit);
    if (confirm) {
        const std::size_t sym = symbolic_rank(s);
        if (sym != numeric)
            throw Error("sampled generic rank " + std::to_string(numeric) +
                        " disagrees with symbolic rank " + std::to_string(sym) + " for " +
                        alg.name());
    }
    return static_cast<std::uint32_t>(numeric);
}

std::uint32_t invariant_count(const LieAlgebra& alg, const RankOptions& opts) {
    return alg.dim() - generic_rank(alg, opts);
}

} // namespace triag
