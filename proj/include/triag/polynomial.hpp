#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "triag/rat.hpp"
#include "triag/universe.hpp"

namespace triag {

// Power product over the universe variables, stored sparsely as
// (variable index, exponent) pairs sorted by variable index.
class Monomial {
public:
    using Entry = std::pair<VarIdx, std::uint32_t>;

    Monomial() = default;
    static Monomial var(VarIdx v, std::uint32_t e = 1) {
        Monomial m;
        if (e) m.entries_.push_back({v, e}), m.degree_ = e;
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return entries_.empty(); }
    std::uint32_t exponent(VarIdx v) const;

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt when not divisible.
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divides(const Monomial& o) const { return o.divide(*this).has_value(); }
    static Monomial gcd(const Monomial& a, const Monomial& b);
    Monomial pow(std::uint32_t e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Graded lexicographic: total degree first, ties broken by the earlier
    // variable (smaller canonical index) carrying the larger exponent.
    static int cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<Entry> entries_;
    std::uint32_t degree_ = 0;
    friend class Polynomial;
};

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) < 0; }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed (M, f) universe. Terms are kept in ascending graded-lex order with
// no zero coefficients; the representation is canonical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(Universe u) : u_(u) {}
    Polynomial(Universe u, const Rat& c);

    static Polynomial variable(Universe u, VarIdx v);
    static Polynomial variable(Universe u, const VarId& v) { return variable(u, u.index(v)); }
    static Polynomial constant(Universe u, const Rat& c) { return Polynomial(u, c); }

    const Universe& universe() const { return u_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rat constant_value() const; // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
    std::uint32_t degree_in(VarIdx v) const;

    const Monomial& leading_monomial() const;
    const Rat& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial operator*(const Rat& c) const;
    friend Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }
    Polynomial mul_monomial(const Monomial& m, const Rat& c) const;
    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(VarIdx v) const;

    // Exact evaluation; `point` is indexed by canonical variable index and
    // must cover the whole universe.
    Rat eval(std::span<const Rat> point) const;

    // Exact quotient when `d` divides this polynomial, nullopt otherwise.
    std::optional<Polynomial> try_divide(const Polynomial& d) const;

    // Largest monomial dividing every term (the monomial content).
    Monomial monomial_content() const;
    // Rational scalar making the polynomial integer, primitive (coefficient
    // gcd 1) and positive on its leading term: this == unit * primitive().
    std::pair<Rat, Polynomial> primitive() const;

    std::set<VarIdx> support() const;

    void add_term(const Monomial& m, const Rat& c);

private:
    Universe u_;
    TermMap terms_;
};

// GCD over Q[universe], normalized primitive with positive leading
// coefficient; gcd(0, b) = primitive part of b. Implemented by monomial
// peeling plus a primitive pseudo-remainder sequence in a chosen main
// variable with recursively computed contents.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Total order on polynomials (degree, then term-by-term from the leading
// end); consistent with equality. Used for canonical sorting of composite
// expressions, not for any ring structure.
int poly_cmp(const Polynomial& a, const Polynomial& b);

struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return poly_cmp(a, b) < 0; }
};

} // namespace triag
