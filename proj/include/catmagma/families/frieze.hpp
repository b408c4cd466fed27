#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"
#include "catmagma/families/triangulation.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::frieze {

inline FriezeSequence generator() { return {{0, 0}}; }

inline FriezeSequence product(const FriezeSequence& a, const FriezeSequence& b) {
    const std::size_t n = a.seq.size();
    const std::size_t m = b.seq.size();
    std::vector<long long> c(n + m - 1);
    c[0] = a.seq[0] + 1;
    for (std::size_t i = 1; i + 1 < n; ++i) c[i] = a.seq[i];
    c[n - 1] = a.seq[n - 1] + b.seq[0] + 1;
    for (std::size_t i = n; i + 1 < n + m - 1; ++i) c[i] = b.seq[i - n + 1];
    c[n + m - 2] = b.seq[m - 1] + 1;
    return {c};
}

inline long long norm(const FriezeSequence& e) {
    return static_cast<long long>(e.seq.size()) - 1;
}

/// Rows 1..n-1 of the frieze array over one period window: row 1 all ones,
/// row 2 the sequence, descending by the unimodular quadrangle rule.
/// Throws a validity error when a division is inexact, an interior entry is
/// not positive, or the last row is not all ones.
inline std::vector<std::vector<long long>> frieze_expand(const FriezeSequence& e) {
    const std::size_t n = e.seq.size();
    if (n < 2) throw parse_error(parse_error::kind::validity, 0, "sequence needs length >= 2");
    std::vector<std::vector<long long>> rows;
    rows.push_back(std::vector<long long>(n, 1));
    if (n == 2) return rows; // generator window: the below-row checks are vacuous
    rows.push_back(e.seq);
    for (std::size_t i = 0; i < n; ++i)
        if (e.seq[i] < 1)
            throw parse_error(parse_error::kind::validity, i, "frieze entries must be positive");
    for (std::size_t k = 2; k + 1 < n; ++k) {
        const auto& above = rows[k - 2];
        const auto& cur = rows[k - 1];
        std::vector<long long> next(n);
        for (std::size_t j = 0; j < n; ++j) {
            const long long num = cur[j] * cur[(j + 1) % n] - 1;
            const long long den = above[(j + 1) % n];
            if (den == 0 || num % den != 0)
                throw parse_error(parse_error::kind::validity, j, "unimodular rule gives a non-integer");
            next[j] = num / den;
            if (k + 2 < n && next[j] < 1)
                throw parse_error(parse_error::kind::validity, j, "frieze array entry not positive");
        }
        rows.push_back(std::move(next));
    }
    for (long long v : rows.back())
        if (v != 1)
            throw parse_error(parse_error::kind::validity, 0, "last frieze row is not all ones");
    return rows;
}

inline bool is_valid(const FriezeSequence& e) {
    if (e.seq.size() == 2) return e.seq[0] == 0 && e.seq[1] == 0;
    try {
        frieze_expand(e);
        return true;
    } catch (const parse_error&) {
        return false;
    }
}

/// Rebuild the triangulation whose vertex degrees (less one) give the
/// sequence, by repeatedly clipping ears (entries equal to one).
inline Triangulation to_triangulation(const FriezeSequence& e) {
    const int n = static_cast<int>(e.seq.size());
    if (n == 2) return triangulation::generator();
    std::vector<int> vertex(static_cast<std::size_t>(n));
    std::vector<long long> val = e.seq;
    for (int i = 0; i < n; ++i) vertex[static_cast<std::size_t>(i)] = i + 1;
    Triangulation t;
    t.n = n;
    while (vertex.size() > 2) {
        std::size_t ear = vertex.size();
        for (std::size_t i = 0; i < vertex.size(); ++i)
            if (val[i] == 1) {
                ear = i;
                break;
            }
        if (ear == vertex.size())
            throw parse_error(parse_error::kind::validity, 0, "sequence has no ear; not a frieze sequence");
        const std::size_t prev = (ear + vertex.size() - 1) % vertex.size();
        const std::size_t next = (ear + 1) % vertex.size();
        int a = vertex[prev], b = vertex[next];
        if (a > b) std::swap(a, b);
        if (b - a >= 2 && !(a == 1 && b == n)) t.chords.emplace_back(a, b);
        --val[prev];
        --val[next];
        vertex.erase(vertex.begin() + static_cast<long>(ear));
        val.erase(val.begin() + static_cast<long>(ear));
    }
    if (val[0] != 0 || val[1] != 0)
        throw parse_error(parse_error::kind::validity, 0, "degrees do not close up; not a frieze sequence");
    std::sort(t.chords.begin(), t.chords.end());
    return t;
}

inline std::optional<std::pair<FriezeSequence, FriezeSequence>> factorize(const FriezeSequence& e) {
    if (e.seq.size() == 2) return std::nullopt;
    auto parts = triangulation::factorize(to_triangulation(e));
    return std::make_pair(triangulation::to_frieze(parts->first),
                          triangulation::to_frieze(parts->second));
}

/// Direct inversion of the product formula, validated with frieze_expand;
/// kept as an independent route to cross-check the factorization above.
inline std::vector<std::pair<FriezeSequence, FriezeSequence>>
factorize_by_split_search(const FriezeSequence& e) {
    std::vector<std::pair<FriezeSequence, FriezeSequence>> found;
    const int len = static_cast<int>(e.seq.size());
    for (int n = 2; n <= len - 1; ++n) {
        const int m = len - n + 1;
        for (long long s = 0; s + 1 <= e.seq[static_cast<std::size_t>(n - 1)]; ++s) {
            FriezeSequence a, b;
            a.seq.assign(e.seq.begin(), e.seq.begin() + n);
            a.seq[0] -= 1;
            a.seq[static_cast<std::size_t>(n - 1)] = s;
            b.seq.assign(e.seq.begin() + n - 1, e.seq.end());
            b.seq[0] = e.seq[static_cast<std::size_t>(n - 1)] - 1 - s;
            b.seq[static_cast<std::size_t>(m - 1)] -= 1;
            if (a.seq[0] < 0 || b.seq[0] < 0 || b.seq[static_cast<std::size_t>(m - 1)] < 0) continue;
            if (is_valid(a) && is_valid(b) && product(a, b) == e) found.emplace_back(a, b);
        }
    }
    return found;
}

inline std::string render(const FriezeSequence& e) { return codec::join(e.seq, ','); }

inline FriezeSequence parse(std::string_view s) {
    codec::Cursor c{s};
    FriezeSequence f;
    f.seq = codec::read_uint_list(c, ',', "sequence entry");
    c.expect_done();
    if (f.seq.size() < 2)
        throw parse_error(parse_error::kind::validity, 0, "sequence needs length >= 2");
    if (f.seq.size() == 2) {
        if (f.seq[0] != 0 || f.seq[1] != 0)
            throw parse_error(parse_error::kind::validity, 0, "the only length-2 element is 0,0");
        return f;
    }
    frieze_expand(f); // throws on invalid input
    return f;
}

} // namespace catmagma::frieze
