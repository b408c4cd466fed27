#pragma once

#include "catmagma/counting.hpp"
#include "catmagma/family.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace catmagma {

/// Recursively factorize down to generators; the canonical term of e.
inline Term decompose(const FamilyDescriptor& f, const Element& e) {
    auto parts = f.factorize(e);
    if (!parts) return Term::leaf(f.generator_index(e));
    return Term::node(decompose(f, parts->first), decompose(f, parts->second));
}

/// Fold the term back through a family: leaves become generators, nodes
/// become products.
inline Element compose(const FamilyDescriptor& f, const Term& t) {
    if (t.is_leaf()) {
        const int g = t.generator_index();
        if (g < 1 || g > f.generator_count)
            throw contract_error("compose: generator index outside the family's generator set");
        return f.generator(GeneratorId{g});
    }
    return f.product(compose(f, t.left()), compose(f, t.right()));
}

/// Decompose, substitute generators and product, multiply out. sigma maps
/// 1-based generator indices and defaults to the identity.
inline Element universal_convert(const FamilyDescriptor& src, const FamilyDescriptor& dst,
                                 const Element& e, const std::vector<int>* sigma = nullptr) {
    if (src.generator_count != dst.generator_count)
        throw contract_error("universal_convert: generator counts differ");
    Term t = decompose(src, e);
    if (sigma) {
        if (static_cast<int>(sigma->size()) != src.generator_count)
            throw contract_error("universal_convert: sigma must cover every generator");
        std::vector<char> hit(sigma->size(), 0);
        for (int v : *sigma) {
            if (v < 1 || v > dst.generator_count || hit[static_cast<std::size_t>(v) - 1])
                throw contract_error("universal_convert: sigma is not a bijection");
            hit[static_cast<std::size_t>(v) - 1] = 1;
        }
        t = relabel_term(t, *sigma);
    }
    return compose(dst, t);
}

/// The opposite product u *op v = v * u.
inline Element opposite_product(const FamilyDescriptor& f, const Element& a, const Element& b) {
    return f.product(b, a);
}

/// All elements of the given norm, ordered by canonical text.
inline std::vector<Element> enumerate_elements(const FamilyDescriptor& f, long long n,
                                               long long cap = kDefaultNormCap) {
    if (n < 1) throw contract_error("enumerate_elements: norm must be >= 1");
    if (n > cap)
        throw contract_error("enumerate_elements: norm " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::vector<Element>> by_norm(static_cast<std::size_t>(n) + 1);
    for (int g = 1; g <= f.generator_count; ++g) by_norm[1].push_back(f.generator(GeneratorId{g}));
    for (long long m = 2; m <= n; ++m)
        for (long long k = 1; k < m; ++k)
            for (const Element& l : by_norm[static_cast<std::size_t>(k)])
                for (const Element& r : by_norm[static_cast<std::size_t>(m - k)])
                    by_norm[static_cast<std::size_t>(m)].push_back(f.product(l, r));
    std::vector<Element>& out = by_norm[static_cast<std::size_t>(n)];
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
        return f.render(a) < f.render(b);
    });
    return out;
}

struct NarayanaHistogram {
    long long norm = 0;
    std::map<long long, long long> counts; // k -> number of norm-n elements
};

/// Distribution of the right-generator-multiplication count over all
/// elements of the given norm.
inline NarayanaHistogram narayana_histogram(const FamilyDescriptor& f, long long n,
                                            long long cap = kDefaultNormCap) {
    if (n < 2) throw contract_error("narayana_histogram: norm must be >= 2");
    NarayanaHistogram h;
    h.norm = n;
    for (const Element& e : enumerate_elements(f, n, cap)) ++h.counts[narayana_right(decompose(f, e))];
    return h;
}

} // namespace catmagma
