#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"
#include "catmagma/families/dyck.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::tableau {

inline StandardTableau generator() { return {{}, {}}; }

/// Append a fresh top cell, t2 shifted past t1's largest entry, and a fresh
/// closing bottom cell.
inline StandardTableau product(const StandardTableau& a, const StandardTableau& b) {
    const int ka = 2 * static_cast<int>(a.top.size());
    const int kb = 2 * static_cast<int>(b.top.size());
    StandardTableau r = a;
    r.top.push_back(ka + 1);
    for (int v : b.top) r.top.push_back(v + ka + 1);
    for (int v : b.bottom) r.bottom.push_back(v + ka + 1);
    r.bottom.push_back(ka + kb + 2);
    return r;
}

inline std::optional<std::pair<StandardTableau, StandardTableau>>
factorize(const StandardTableau& e) {
    if (e.top.empty()) return std::nullopt;
    const int len = 2 * static_cast<int>(e.top.size());
    std::vector<char> is_top(static_cast<std::size_t>(len) + 1, 0);
    for (int v : e.top) is_top[static_cast<std::size_t>(v)] = 1;
    // rightmost position where the walk leaves level zero
    int q = 0, h = 0;
    for (int p = 1; p <= len; ++p) {
        if (is_top[static_cast<std::size_t>(p)] && h == 0) q = p;
        h += is_top[static_cast<std::size_t>(p)] ? 1 : -1;
    }
    StandardTableau a, b;
    for (int v : e.top) {
        if (v < q) a.top.push_back(v);
        else if (v > q) b.top.push_back(v - q);
    }
    for (int v : e.bottom) {
        if (v < q) a.bottom.push_back(v);
        else if (v < len) b.bottom.push_back(v - q);
    }
    return std::make_pair(a, b);
}

inline long long norm(const StandardTableau& e) {
    return static_cast<long long>(e.top.size()) + 1;
}

inline std::string render(const StandardTableau& e) {
    if (e.top.empty()) return "_";
    return codec::join(e.top, ',') + "/" + codec::join(e.bottom, ',');
}

inline StandardTableau parse(std::string_view s) {
    if (s == "_") return generator();
    codec::Cursor c{s};
    StandardTableau t;
    for (long long v : codec::read_uint_list(c, ',', "top entry")) t.top.push_back(static_cast<int>(v));
    c.expect('/', "between rows");
    for (long long v : codec::read_uint_list(c, ',', "bottom entry")) t.bottom.push_back(static_cast<int>(v));
    c.expect_done();
    if (t.top.size() != t.bottom.size())
        throw parse_error(parse_error::kind::validity, 0, "rows must have equal length");
    const int len = 2 * static_cast<int>(t.top.size());
    std::vector<int> seen(static_cast<std::size_t>(len) + 1, 0);
    for (int v : t.top) {
        if (v < 1 || v > len || seen[v]++)
            throw parse_error(parse_error::kind::validity, 0, "entries must be a permutation of 1..2m");
    }
    for (int v : t.bottom) {
        if (v < 1 || v > len || seen[v]++)
            throw parse_error(parse_error::kind::validity, 0, "entries must be a permutation of 1..2m");
    }
    for (std::size_t i = 0; i + 1 < t.top.size(); ++i)
        if (t.top[i] >= t.top[i + 1] || t.bottom[i] >= t.bottom[i + 1])
            throw parse_error(parse_error::kind::validity, 0, "rows must increase");
    for (std::size_t i = 0; i < t.top.size(); ++i)
        if (t.top[i] >= t.bottom[i])
            throw parse_error(parse_error::kind::validity, 0, "columns must increase");
    return t;
}

/// Top-row entries index the up steps, bottom-row entries the down steps.
inline DyckPath to_dyck(const StandardTableau& t) {
    std::string w(t.top.size() * 2, 'd');
    for (int v : t.top) w[static_cast<std::size_t>(v - 1)] = 'u';
    return {w};
}

} // namespace catmagma::tableau
