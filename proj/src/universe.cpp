#include "triag/universe.hpp"

#include <cctype>

namespace triag {

namespace {

bool parse_uint(const std::string& s, std::size_t& pos, std::uint32_t& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
        if (v > 1000000) return false;
        ++pos;
    }
    out = static_cast<std::uint32_t>(v);
    return true;
}

} // namespace

VarIdx Universe::parse_label(const std::string& s) const {
    std::size_t pos = 0;
    if (s.rfind("n_", 0) == 0) {
        pos = 2;
        std::uint32_t i = 0, k = 0;
        if (!parse_uint(s, pos, i) || pos >= s.size() || s[pos] != '_')
            throw ParseError("malformed variable '" + s + "'", pos);
        ++pos;
        if (!parse_uint(s, pos, k) || pos != s.size())
            throw ParseError("malformed variable '" + s + "'", pos);
        if (!valid_n(i, k)) throw ParseError("variable '" + s + "' outside universe", 0);
        return index_n(i, k);
    }
    if (s.rfind("x_", 0) == 0) {
        pos = 2;
        std::uint32_t a = 0;
        if (!parse_uint(s, pos, a) || pos != s.size())
            throw ParseError("malformed variable '" + s + "'", pos);
        if (a < 1 || a > f) throw ParseError("variable '" + s + "' outside universe", 0);
        return index_x(a);
    }
    throw ParseError("unknown variable '" + s + "'", 0);
}

} // namespace triag
