#include "triag/json_io.hpp"

namespace triag {

namespace {

struct Slot {
    std::uint32_t row_i, row_k, col_i, col_k;
};

std::vector<Slot> off_diagonal_slots(std::uint32_t M) {
    std::vector<Slot> slots;
    if (M < 3) return slots;
    slots.push_back({1, 2, 2, M});
    for (std::uint32_t j = 2; j + 2 <= M; ++j) slots.push_back({j, j + 1, 1, M});
    slots.push_back({M - 1, M, 1, M - 1});
    return slots;
}

Rat slot_value(const CharMatrixSpec& spec, std::uint32_t alpha, const Slot& s) {
    if (s.row_i == 1 && s.row_k == 2) return spec.lam_top[alpha - 1];
    if (s.row_i == spec.M - 1) return spec.lam_bottom[alpha - 1];
    return spec.lam_mid[alpha - 1][s.row_i - 2];
}

} // namespace

Json algebra_to_json(const LieAlgebra& alg) {
    const Universe& u = alg.universe();
    Json j;
    j["M"] = alg.M();
    j["f"] = alg.f();
    Json basis = Json::array();
    for (VarIdx v = 0; v < u.size(); ++v) basis.push_back(u.label(v));
    j["basis"] = std::move(basis);

    Json brackets = Json::array();
    for (const auto& [ij, terms] : alg.brackets()) {
        Json entry;
        entry["i"] = u.label(ij.first);
        entry["j"] = u.label(ij.second);
        Json jterms = Json::array();
        for (const auto& t : terms)
            jterms.push_back(Json{{"k", u.label(t.k)}, {"c", rat_to_string(t.c)}});
        entry["terms"] = std::move(jterms);
        brackets.push_back(std::move(entry));
    }
    j["brackets"] = std::move(brackets);

    if (alg.char_spec()) {
        const CharMatrixSpec& spec = *alg.char_spec();
        Json mats = Json::array();
        for (std::uint32_t alpha = 1; alpha <= spec.f; ++alpha) {
            Json m;
            Json diag = Json::array();
            for (const Rat& a : spec.free_diag[alpha - 1]) diag.push_back(rat_to_string(a));
            m["free_diagonal"] = std::move(diag);
            Json off = Json::array();
            for (const Slot& s : off_diagonal_slots(spec.M)) {
                const Rat v = slot_value(spec, alpha, s);
                if (v == 0) continue;
                off.push_back(Json{{"row", "n_" + std::to_string(s.row_i) + "_" + std::to_string(s.row_k)},
                                   {"col", "n_" + std::to_string(s.col_i) + "_" + std::to_string(s.col_k)},
                                   {"c", rat_to_string(v)}});
            }
            m["off_diagonal"] = std::move(off);
            mats.push_back(std::move(m));
        }
        j["char_matrices"] = std::move(mats);
        if (spec.f >= 2) {
            Json sig = Json::array();
            for (std::uint32_t a = 1; a <= spec.f; ++a) {
                Json row = Json::array();
                for (std::uint32_t b = 1; b <= spec.f; ++b)
                    row.push_back(rat_to_string(spec.sigma_entry(a, b)));
                sig.push_back(std::move(row));
            }
            j["sigma"] = std::move(sig);
        }
    }
    return j;
}

LieAlgebra algebra_from_json(const Json& j, const std::string& name) {
    if (!j.is_object() || !j.contains("M") || !j.contains("f"))
        throw ParseError("algebra JSON needs integer fields M and f", 0);
    const std::uint32_t M = j.at("M").get<std::uint32_t>();
    const std::uint32_t f = j.at("f").get<std::uint32_t>();
    const Universe u(M, f);

    if (j.contains("basis")) {
        const auto& basis = j.at("basis");
        if (!basis.is_array() || basis.size() != u.size())
            throw ParseError("basis must list the " + std::to_string(u.size()) +
                                 " canonical labels",
                             0);
        for (VarIdx v = 0; v < u.size(); ++v)
            if (basis[v].get<std::string>() != u.label(v))
                throw ParseError("basis label mismatch at position " + std::to_string(v), v);
    }

    BracketMap brackets;
    for (const auto& entry : j.value("brackets", Json::array())) {
        const VarIdx i = u.parse_label(entry.at("i").get<std::string>());
        const VarIdx k = u.parse_label(entry.at("j").get<std::string>());
        if (i == k) throw ParseError("bracket of an element with itself", 0);
        std::vector<BracketTerm> terms;
        for (const auto& t : entry.at("terms"))
            terms.push_back({u.parse_label(t.at("k").get<std::string>()),
                             rat_from_string(t.at("c").get<std::string>())});
        if (i < k) {
            brackets[{i, k}] = std::move(terms);
        } else {
            for (auto& t : terms) t.c = -t.c;
            brackets[{k, i}] = std::move(terms);
        }
    }

    if (!j.contains("char_matrices"))
        return LieAlgebra::from_brackets(u, std::move(brackets), name);

    const auto& mats = j.at("char_matrices");
    if (!mats.is_array() || mats.size() != f)
        throw ParseError("char_matrices must list f matrices", 0);
    CharMatrixSpec spec = CharMatrixSpec::diagonal(M, std::vector<std::vector<Rat>>(
                                                          f, std::vector<Rat>(M - 1, Rat(0))));
    const auto slots = off_diagonal_slots(M);
    for (std::uint32_t alpha = 1; alpha <= f; ++alpha) {
        const auto& m = mats[alpha - 1];
        const auto& diag = m.at("free_diagonal");
        if (!diag.is_array() || diag.size() != M - 1)
            throw ParseError("free_diagonal must list M-1 entries", 0);
        for (std::uint32_t i = 0; i + 1 < M; ++i)
            spec.free_diag[alpha - 1][i] = rat_from_string(diag[i].get<std::string>());
        for (const auto& off : m.value("off_diagonal", Json::array())) {
            const std::string row = off.at("row").get<std::string>();
            const std::string col = off.at("col").get<std::string>();
            const Rat c = rat_from_string(off.at("c").get<std::string>());
            bool matched = false;
            for (const Slot& s : slots) {
                const std::string srow = "n_" + std::to_string(s.row_i) + "_" + std::to_string(s.row_k);
                const std::string scol = "n_" + std::to_string(s.col_i) + "_" + std::to_string(s.col_k);
                if (row == srow && col == scol) {
                    matched = true;
                    if (s.row_i == 1 && s.row_k == 2)
                        spec.lam_top[alpha - 1] = c;
                    else if (s.row_i == M - 1)
                        spec.lam_bottom[alpha - 1] = c;
                    else
                        spec.lam_mid[alpha - 1][s.row_i - 2] = c;
                    break;
                }
            }
            if (!matched)
                throw CanonicalFormViolation("off-diagonal entry (" + row + ", " + col +
                                             ") is not an admissible slot");
        }
    }
    if (j.contains("sigma")) {
        const auto& sig = j.at("sigma");
        if (!sig.is_array() || sig.size() != f) throw ParseError("sigma must be f x f", 0);
        for (std::uint32_t a = 0; a < f; ++a) {
            if (!sig[a].is_array() || sig[a].size() != f) throw ParseError("sigma must be f x f", 0);
            for (std::uint32_t b = 0; b < f; ++b)
                spec.sigma[a][b] = rat_from_string(sig[a][b].get<std::string>());
        }
    }

    LieAlgebra alg = build_L(M, spec);
    alg.set_name(name);
    if (!brackets.empty() && !(brackets == alg.brackets()))
        throw ParseError("listed brackets disagree with the characteristic matrices", 0);
    return alg;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["algebra"] = cert.algebra;
    j["invariant"] = cert.invariant;
    Json per = Json::array();
    for (const auto& g : cert.per_generator) {
        Json e;
        e["generator"] = g.generator;
        e["zero"] = g.zero;
        e["residual"] = g.zero ? Json(nullptr) : Json(g.residual);
        per.push_back(std::move(e));
    }
    j["per_generator"] = std::move(per);
    j["pass"] = cert.pass;
    return j;
}

std::string certificate_text(const Certificate& cert) {
    std::string out;
    out += "algebra:   " + cert.algebra + "\n";
    out += "invariant: " + cert.invariant + "\n";
    for (const auto& g : cert.per_generator) {
        out += "  " + g.generator + ": ";
        out += g.zero ? "zero" : ("RESIDUAL " + g.residual);
        out += "\n";
    }
    out += cert.pass ? "PASS\n" : "FAIL\n";
    return out;
}

Json catalog_entry_to_json(const CatalogEntry& entry) {
    Json j;
    j["family"] = family_name(entry.family);
    j["M"] = entry.M;
    j["f"] = entry.f;
    Json params = Json::object();
    for (const auto& [k, v] : entry.parameters) params[k] = rat_to_string(v);
    j["parameters"] = std::move(params);
    j["expected_count"] = entry.expected_count;
    Json invs = Json::array();
    for (const auto& inv : entry.invariants) invs.push_back(to_text(inv));
    j["invariants"] = std::move(invs);
    return j;
}

} // namespace triag
