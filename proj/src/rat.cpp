#include "triag/rat.hpp"

#include <cctype>

namespace triag {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("malformed rational '" + s + "'", i);
        }
    }
    if (!digits) throw ParseError("malformed rational '" + s + "'", s.size());
    Rat q(s);
    if (slash && q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.size());
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw DenominatorVanishes("0 raised to negative power");
        return Rat(0);
    }
    const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), n);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

} // namespace triag
