#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::avoid321 {

inline AvoidingPermutation generator() { return {{}}; }

inline bool is_avoiding(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (p[i] > p[j] && p[j] > p[k]) return false;
    return true;
}

/// p1 sits top-left, p2 bottom-right one row lower; a row is inserted
/// between them and a column appended on the right. p2's above-diagonal
/// dots cascade one column slot to the right, the last into the new
/// column, and the inserted row's dot takes the first vacated column
/// (or the new column when p2 has no above-diagonal dot).
inline AvoidingPermutation product(const AvoidingPermutation& pa, const AvoidingPermutation& pb) {
    const int n1 = static_cast<int>(pa.perm.size());
    const int n2 = static_cast<int>(pb.perm.size());
    const int n = n1 + n2 + 1;
    std::vector<int> res(static_cast<std::size_t>(n), 0);
    for (int r = 1; r <= n1; ++r) res[r - 1] = pa.perm[r - 1];
    std::vector<int> white_rows, white_cols;
    for (int i = 1; i <= n2; ++i)
        if (pb.perm[i - 1] > i) {
            white_rows.push_back(i);
            white_cols.push_back(pb.perm[i - 1]);
        }
    const int k = static_cast<int>(white_rows.size());
    res[n1] = (k == 0) ? n : n1 + white_cols[0];
    int alpha = 0;
    for (int i = 1; i <= n2; ++i) {
        const int c = pb.perm[i - 1];
        if (c <= i) {
            res[n1 + i] = n1 + c;
        } else {
            res[n1 + i] = (alpha + 1 < k) ? n1 + white_cols[alpha + 1] : n;
            ++alpha;
        }
    }
    return {res};
}

namespace detail {
/// Undo the cascade assuming the inserted row is r (1-based); empty on failure.
inline std::optional<std::pair<AvoidingPermutation, AvoidingPermutation>>
try_split(const std::vector<int>& p, int r) {
    const int n = static_cast<int>(p.size());
    const int n1 = r - 1;
    const int n2 = n - r;
    std::vector<int> a(p.begin(), p.begin() + n1);
    for (int v : a)
        if (v > n1) return std::nullopt;
    std::vector<int> b(static_cast<std::size_t>(n2), 0);
    std::vector<int> white_rows, cur_cols;
    for (int i = 1; i <= n2; ++i) {
        const int c = p[r + i - 1] - n1;
        if (c < 1) return std::nullopt;
        if (c > i) {
            white_rows.push_back(i);
            cur_cols.push_back(c);
        } else {
            b[i - 1] = c;
        }
    }
    const int k = static_cast<int>(white_rows.size());
    const int new_dot_col = p[r - 1] - n1;
    if (new_dot_col < 1) return std::nullopt;
    if (k == 0) {
        if (new_dot_col != n2 + 1) return std::nullopt;
    } else {
        if (cur_cols.back() != n2 + 1 || new_dot_col > n2) return std::nullopt;
        b[white_rows[0] - 1] = new_dot_col;
        for (int i = 1; i < k; ++i) b[white_rows[i] - 1] = cur_cols[i - 1];
    }
    std::vector<int> seen(static_cast<std::size_t>(n2) + 1, 0);
    for (int v : b) {
        if (v < 1 || v > n2 || seen[v]++) return std::nullopt;
    }
    if (!is_avoiding(a) || !is_avoiding(b)) return std::nullopt;
    return std::make_pair(AvoidingPermutation{a}, AvoidingPermutation{b});
}
} // namespace detail

/// Scan candidate inserted rows and validate by remultiplying; freeness
/// guarantees a unique hit.
inline std::optional<std::pair<AvoidingPermutation, AvoidingPermutation>>
factorize(const AvoidingPermutation& e) {
    if (e.perm.empty()) return std::nullopt;
    const int n = static_cast<int>(e.perm.size());
    std::optional<std::pair<AvoidingPermutation, AvoidingPermutation>> hit;
    for (int r = 1; r <= n; ++r) {
        auto cand = detail::try_split(e.perm, r);
        if (cand && product(cand->first, cand->second) == e) {
            if (hit) throw contract_error("avoid321: factorization is not unique");
            hit = cand;
        }
    }
    if (!hit) throw contract_error("avoid321: no factorization found for a reducible element");
    return hit;
}

inline long long norm(const AvoidingPermutation& e) {
    return static_cast<long long>(e.perm.size()) + 1;
}

inline std::string render(const AvoidingPermutation& e) {
    return e.perm.empty() ? "_" : codec::join(e.perm, ',');
}

inline AvoidingPermutation parse(std::string_view s) {
    if (s == "_") return {{}};
    codec::Cursor c{s};
    std::vector<int> p;
    for (long long v : codec::read_uint_list(c, ',', "permutation entry")) p.push_back(static_cast<int>(v));
    c.expect_done();
    const int n = static_cast<int>(p.size());
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]++)
            throw parse_error(parse_error::kind::validity, 0, "not a permutation of 1..n");
    }
    if (!is_avoiding(p))
        throw parse_error(parse_error::kind::validity, 0, "permutation contains a 321 pattern");
    return {p};
}

} // namespace catmagma::avoid321
