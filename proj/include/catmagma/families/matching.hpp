#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::matching {

inline NestedMatching generator() { return {2, {}}; }

/// u's virtual node merges with v's first node; the image of v's virtual
/// node carries the new arc's right end and one fresh virtual node is
/// appended on the right.
inline NestedMatching product(const NestedMatching& u, const NestedMatching& v) {
    NestedMatching r;
    r.nodes = u.nodes + v.nodes;
    r.arcs = u.arcs;
    const int shift = u.nodes - 1;
    for (auto [a, b] : v.arcs) r.arcs.emplace_back(a + shift, b + shift);
    r.arcs.emplace_back(u.nodes, r.nodes - 1);
    std::sort(r.arcs.begin(), r.arcs.end());
    return r;
}

inline std::optional<std::pair<NestedMatching, NestedMatching>>
factorize(const NestedMatching& e) {
    if (e.nodes == 2) return std::nullopt;
    const int last = e.nodes - 1;
    int s = 0;
    for (auto [a, b] : e.arcs)
        if (b == last) s = a;
    NestedMatching u, v;
    u.nodes = s;
    v.nodes = e.nodes - s;
    for (auto [a, b] : e.arcs) {
        if (b < s) u.arcs.emplace_back(a, b);
        else if (a > s && b < last) v.arcs.emplace_back(a - (s - 1), b - (s - 1));
    }
    return std::make_pair(u, v);
}

inline long long norm(const NestedMatching& e) { return e.nodes / 2; }

inline std::string render(const NestedMatching& e) { return codec::render_pair_list(e.nodes, e.arcs); }

inline NestedMatching parse(std::string_view s) {
    auto [nodes, arcs] = codec::parse_pair_list(s);
    if (nodes < 2 || nodes % 2 != 0)
        throw parse_error(parse_error::kind::validity, 0, "node count must be even and >= 2");
    std::vector<int> cover(static_cast<std::size_t>(nodes) + 1, 0);
    for (auto& [a, b] : arcs) {
        if (a > b) std::swap(a, b);
        if (a < 2 || b > nodes - 1 || a == b)
            throw parse_error(parse_error::kind::validity, 0, "arc endpoints must lie in [2, 2n-1]");
        ++cover[static_cast<std::size_t>(a)];
        ++cover[static_cast<std::size_t>(b)];
    }
    if (static_cast<int>(arcs.size()) != nodes / 2 - 1)
        throw parse_error(parse_error::kind::validity, 0, "expected n-1 arcs on 2n nodes");
    for (int i = 2; i <= nodes - 1; ++i)
        if (cover[static_cast<std::size_t>(i)] != 1)
            throw parse_error(parse_error::kind::validity, 0,
                              "arcs must cover nodes 2..2n-1 exactly once");
    for (auto [a, b] : arcs)
        for (auto [c, d] : arcs)
            if (a < c && c < b && b < d)
                throw parse_error(parse_error::kind::validity, 0, "arcs cross");
    std::sort(arcs.begin(), arcs.end());
    return {nodes, arcs};
}

} // namespace catmagma::matching
