#pragma once

#include "catmagma/bijection.hpp"
#include "catmagma/counting.hpp"
#include "catmagma/family.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace catmagma {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace verify_detail {

inline void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
                   const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

} // namespace verify_detail

/// Enumeration counts, unique factorization, norm additivity, the single
/// irreducible, and codec round trips, exhaustively up to max_norm.
inline std::vector<CheckResult> verify_family(const FamilyDescriptor& f, long long max_norm,
                                              long long cap = kDefaultNormCap) {
    using verify_detail::report;
    std::vector<CheckResult> out;
    const std::string tag(f.code);

    std::vector<std::vector<Element>> by_norm(static_cast<std::size_t>(max_norm) + 1);
    for (long long n = 1; n <= max_norm; ++n) by_norm[static_cast<std::size_t>(n)] = enumerate_elements(f, n, cap);

    bool counts_ok = true, distinct_ok = true;
    std::string counts_detail;
    for (long long n = 1; n <= max_norm; ++n) {
        const auto& es = by_norm[static_cast<std::size_t>(n)];
        if (BigInt(es.size()) != catalan_number(n - 1)) {
            counts_ok = false;
            counts_detail = "norm " + std::to_string(n) + ": got " + std::to_string(es.size());
        }
        for (std::size_t i = 0; i + 1 < es.size() && distinct_ok; ++i)
            if (f.equals(es[i], es[i + 1])) distinct_ok = false; // sorted, so duplicates adjacent
        for (const Element& e : es)
            if (f.norm(e) != n) {
                counts_ok = false;
                counts_detail = "norm mismatch at norm " + std::to_string(n);
            }
    }
    report(out, tag + " enumeration counts are Catalan", counts_ok, counts_detail);
    report(out, tag + " enumerated elements pairwise distinct", distinct_ok);

    bool fact_ok = true, add_ok = true;
    for (long long na = 1; na < max_norm && (fact_ok || add_ok); ++na)
        for (long long nb = 1; na + nb <= max_norm; ++nb)
            for (const Element& a : by_norm[static_cast<std::size_t>(na)])
                for (const Element& b : by_norm[static_cast<std::size_t>(nb)]) {
                    const Element p = f.product(a, b);
                    if (f.norm(p) != na + nb) add_ok = false;
                    auto parts = f.factorize(p);
                    if (!parts || !f.equals(parts->first, a) || !f.equals(parts->second, b))
                        fact_ok = false;
                }
    report(out, tag + " factorize inverts product (unique factorization)", fact_ok);
    report(out, tag + " norm is additive over the product", add_ok);

    bool irr_ok = by_norm[1].size() == 1 && f.equals(by_norm[1][0], f.generator(GeneratorId{1})) &&
                  !f.factorize(f.generator(GeneratorId{1}));
    report(out, tag + " the generator is the unique irreducible", irr_ok);

    bool codec_ok = true;
    std::string codec_detail;
    for (long long n = 1; n <= max_norm && codec_ok; ++n)
        for (const Element& e : by_norm[static_cast<std::size_t>(n)]) {
            const std::string text = f.render(e);
            try {
                if (!f.equals(f.parse(text), e)) {
                    codec_ok = false;
                    codec_detail = text;
                }
            } catch (const parse_error& ex) {
                codec_ok = false;
                codec_detail = text + ": " + ex.what();
            }
            if (!codec_ok) break;
        }
    report(out, tag + " parse(render(e)) = e on all enumerated elements", codec_ok, codec_detail);

    bool nara_ok = true;
    for (long long n = 2; n <= max_norm; ++n) {
        NarayanaHistogram h = narayana_histogram(f, n, cap);
        BigInt total = 0;
        for (auto [k, c] : h.counts) {
            if (BigInt(c) != narayana_value(n, k)) nara_ok = false;
            if (h.counts.count(n - k) == 0 || h.counts.at(n - k) != c) nara_ok = false;
            total += c;
        }
        if (total != catalan_number(n - 1)) nara_ok = false;
    }
    report(out, tag + " Narayana histogram matches the closed form and is symmetric", nara_ok);

    return out;
}

/// Term algebra checks: codec round trips in all three notations, reverse
/// involution and anti-isomorphism, p-Catalan counts.
inline std::vector<CheckResult> verify_core(long long max_norm, long long cap = kDefaultNormCap) {
    using verify_detail::report;
    std::vector<CheckResult> out;
    const long long tmax = std::min<long long>(max_norm, 6);

    bool codec_ok = true, rev_ok = true;
    for (long long n = 1; n <= tmax; ++n)
        for (const Term& t : enumerate_terms(1, n, cap)) {
            for (Notation no : {Notation::Prefix, Notation::Infix, Notation::Postfix})
                if (term_parse(term_render(t, no), no) != t) codec_ok = false;
            if (reverse_term(reverse_term(t)) != t) rev_ok = false;
            if (!t.is_leaf()) {
                if (reverse_term(t) != Term::node(reverse_term(t.right()), reverse_term(t.left())))
                    rev_ok = false;
            }
        }
    report(out, "core term parse/render round trip (all notations)", codec_ok);
    report(out, "core reverse_term is an involutive anti-isomorphism", rev_ok);

    bool pcat_ok = true;
    for (int p = 1; p <= 3; ++p)
        for (long long n = 1; n <= tmax; ++n)
            if (BigInt(enumerate_terms(p, n, cap).size()) != p_catalan_number(p, n)) pcat_ok = false;
    report(out, "core term counts match p-Catalan numbers (p = 1, 2, 3)", pcat_ok);

    return out;
}

/// Universal bijection round trips and the morphism property for one
/// ordered pair of families.
inline std::vector<CheckResult> verify_pair(const FamilyDescriptor& a, const FamilyDescriptor& b,
                                            long long max_norm, long long cap = kDefaultNormCap) {
    using verify_detail::report;
    std::vector<CheckResult> out;
    const std::string tag = std::string(a.code) + "->" + std::string(b.code);

    bool round_ok = true, norm_ok = true;
    for (long long n = 1; n <= max_norm && round_ok; ++n)
        for (const Element& e : enumerate_elements(a, n, cap)) {
            const Element image = universal_convert(a, b, e);
            if (b.norm(image) != n) norm_ok = false;
            if (!a.equals(universal_convert(b, a, image), e)) round_ok = false;
        }
    report(out, tag + " convert round trip is the identity", round_ok);
    report(out, tag + " convert preserves the norm", norm_ok);

    std::mt19937 rng(20250809);
    bool morph_ok = true;
    for (int trial = 0; trial < 60 && morph_ok; ++trial) {
        const long long na = 1 + static_cast<long long>(rng() % static_cast<unsigned>(std::max<long long>(1, max_norm - 1)));
        const long long nb = 1 + static_cast<long long>(rng() % static_cast<unsigned>(std::max<long long>(1, max_norm - na)));
        auto ea = enumerate_elements(a, na, cap);
        auto eb = enumerate_elements(a, nb, cap);
        const Element& x = ea[rng() % ea.size()];
        const Element& y = eb[rng() % eb.size()];
        const Element lhs = universal_convert(a, b, a.product(x, y));
        const Element rhs = b.product(universal_convert(a, b, x), universal_convert(a, b, y));
        if (!b.equals(lhs, rhs)) morph_ok = false;
    }
    report(out, tag + " convert is a magma morphism (random products)", morph_ok);

    return out;
}

inline std::vector<CheckResult> verify_all(long long max_norm, long long cap = kDefaultNormCap) {
    std::vector<CheckResult> out = verify_core(max_norm, cap);
    for (const FamilyDescriptor& f : family_registry()) {
        auto r = verify_family(f, max_norm, cap);
        out.insert(out.end(), r.begin(), r.end());
    }
    for (const FamilyDescriptor& a : family_registry())
        for (const FamilyDescriptor& b : family_registry()) {
            if (a.id == b.id) continue;
            auto r = verify_pair(a, b, std::min<long long>(max_norm, 5), cap);
            out.insert(out.end(), r.begin(), r.end());
        }
    return out;
}

} // namespace catmagma
