#include "triag/polynomial.hpp"

#include <algorithm>

namespace triag {

std::uint32_t Monomial::exponent(VarIdx v) const {
    for (const auto& [var, exp] : entries_)
        if (var == v) return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            r.entries_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            return std::nullopt;
        } else {
            if (a->second < b->second) return std::nullopt;
            if (a->second > b->second) r.entries_.push_back({a->first, a->second - b->second});
            ++a, ++b;
        }
    }
    r.degree_ = degree_ - o.degree_;
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            const std::uint32_t e = std::min(i->second, j->second);
            r.entries_.push_back({i->first, e});
            r.degree_ += e;
            ++i, ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
    Monomial r;
    if (e == 0) return r;
    r.entries_ = entries_;
    for (auto& [v, x] : r.entries_) x *= e;
    r.degree_ = degree_ * e;
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first != j->first)
            // the monomial owning the earlier variable is lex-greater
            return i->first < j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.entries_.end()) return 1;
    if (j != b.entries_.end()) return -1;
    return 0;
}

Polynomial::Polynomial(Universe u, const Rat& c) : u_(u) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Universe u, VarIdx v) {
    if (v >= u.size()) throw RangeError("variable outside universe");
    Polynomial p(u);
    p.terms_.emplace(Monomial::var(v), Rat(1));
    return p;
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

std::uint32_t Polynomial::degree_in(VarIdx v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw RangeError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw RangeError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(u_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same(u_, o.u_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same(u_, o.u_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same(u_, o.u_);
    Polynomial r(u_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // iterate over the shorter factor's terms in the outer loop
    const Polynomial* a = this;
    const Polynomial* b = &o;
    if (a->terms_.size() > b->terms_.size()) std::swap(a, b);
    for (const auto& [ma, ca] : a->terms_)
        for (const auto& [mb, cb] : b->terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(u_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rat& c) const {
    Polynomial r(u_);
    if (c == 0) return r;
    for (const auto& [mon, coef] : terms_) r.terms_.emplace(mon * m, coef * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::constant(u_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(VarIdx v) const {
    Polynomial r(u_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = *m.divide(Monomial::var(v));
        r.add_term(dm, c * static_cast<long>(e));
    }
    return r;
}

Rat Polynomial::eval(std::span<const Rat> point) const {
    if (point.size() < u_.size()) throw RangeError("evaluation point does not cover the universe");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (const auto& [var, exp] : m.entries()) v *= rat_pow(point[var], static_cast<long>(exp));
        total += v;
    }
    return total;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& d) const {
    require_same(u_, d.u_);
    if (d.is_zero()) throw RangeError("division by zero polynomial");
    Polynomial q(u_);
    Polynomial r = *this;
    const Monomial& dlm = d.leading_monomial();
    const Rat& dlc = d.leading_coefficient();
    while (!r.is_zero()) {
        auto quot = r.leading_monomial().divide(dlm);
        if (!quot) return std::nullopt;
        const Rat c = r.leading_coefficient() / dlc;
        q.add_term(*quot, c);
        r -= d.mul_monomial(*quot, c);
    }
    return q;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    auto it = terms_.begin();
    Monomial g = it->first;
    for (++it; it != terms_.end() && !g.is_one(); ++it) g = Monomial::gcd(g, it->first);
    return g;
}

std::pair<Rat, Polynomial> Polynomial::primitive() const {
    if (terms_.empty()) return {Rat(1), *this};
    // unit = sign(lc) * gcd(numerators) / lcm(denominators)
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat unit(num_gcd, den_lcm);
    unit.canonicalize();
    if (leading_coefficient() < 0) unit = -unit;
    Polynomial prim = *this * (1 / unit);
    return {unit, prim};
}

std::set<VarIdx> Polynomial::support() const {
    std::set<VarIdx> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) s.insert(v);
    return s;
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
    auto i = a.terms().rbegin();
    auto j = b.terms().rbegin();
    for (; i != a.terms().rend() && j != b.terms().rend(); ++i, ++j) {
        const int c = Monomial::cmp(i->first, j->first);
        if (c != 0) return c;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
    }
    if (i != a.terms().rend()) return 1;
    if (j != b.terms().rend()) return -1;
    return 0;
}

} // namespace triag
