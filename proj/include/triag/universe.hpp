#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "triag/errors.hpp"

namespace triag {

using VarIdx = std::uint32_t;

// One coordinate of the dual space: either a matrix-entry variable n_{ik}
// (1 <= i < k <= M) or a non-nilpotent coordinate x^alpha (1 <= alpha <= f).
struct VarId {
    enum class Kind : std::uint8_t { N, X };
    Kind kind;
    std::uint32_t i = 0; // row for N, alpha for X
    std::uint32_t k = 0; // column for N, unused for X

    static VarId n(std::uint32_t i, std::uint32_t k) { return {Kind::N, i, k}; }
    static VarId x(std::uint32_t alpha) { return {Kind::X, alpha, 0}; }

    friend bool operator==(const VarId&, const VarId&) = default;
};

// The ambient variable universe of a pair (M, f). Variables are ordered the
// way the canonical basis vector orders them: n entries by ascending
// superdiagonal k - i, within a diagonal by ascending row, then x^1..x^f.
// All index mappings are closed-form; the struct is a cheap value.
struct Universe {
    std::uint32_t M = 0;
    std::uint32_t f = 0;

    Universe() = default;
    Universe(std::uint32_t M_, std::uint32_t f_) : M(M_), f(f_) {
        if (M < 2) throw InvalidSize("universe requires M >= 2");
    }

    std::uint32_t nil_dim() const { return M * (M - 1) / 2; }
    std::uint32_t size() const { return nil_dim() + f; }

    bool valid_n(std::uint32_t i, std::uint32_t k) const { return 1 <= i && i < k && k <= M; }

    VarIdx index_n(std::uint32_t i, std::uint32_t k) const {
        if (!valid_n(i, k)) throw RangeError("n index out of range");
        const std::uint32_t d = k - i;
        // variables on superdiagonals 1..d-1 precede diagonal d
        const std::uint32_t base = (d - 1) * M - (d - 1) * d / 2;
        return base + (i - 1);
    }

    VarIdx index_x(std::uint32_t alpha) const {
        if (alpha < 1 || alpha > f) throw RangeError("x index out of range");
        return nil_dim() + alpha - 1;
    }

    VarIdx index(const VarId& v) const {
        return v.kind == VarId::Kind::N ? index_n(v.i, v.k) : index_x(v.i);
    }

    VarId var(VarIdx idx) const {
        if (idx >= size()) throw RangeError("variable index out of range");
        const std::uint32_t r = nil_dim();
        if (idx >= r) return VarId::x(idx - r + 1);
        std::uint32_t d = 1;
        while ((d * M - d * (d + 1) / 2) <= idx) ++d;
        const std::uint32_t base = (d - 1) * M - (d - 1) * d / 2;
        const std::uint32_t i = idx - base + 1;
        return VarId::n(i, i + d);
    }

    std::string label(VarIdx idx) const {
        const VarId v = var(idx);
        if (v.kind == VarId::Kind::N)
            return "n_" + std::to_string(v.i) + "_" + std::to_string(v.k);
        return "x_" + std::to_string(v.i);
    }

    // Inverse of label(); throws ParseError on unknown labels.
    VarIdx parse_label(const std::string& s) const;

    friend bool operator==(const Universe&, const Universe&) = default;
};

inline void require_same(const Universe& a, const Universe& b) {
    if (!(a == b))
        throw UniverseMismatch("operands live in different variable universes");
}

} // namespace triag
