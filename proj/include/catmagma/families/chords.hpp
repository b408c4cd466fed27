#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::chords {

inline ChordCircle generator() { return {0, {}}; }

/// Cut at the mark and read counter-clockwise: p1's chords first, then the
/// new chord wrapped around p2's, whose far end is the last node before the
/// mark.
inline ChordCircle product(const ChordCircle& a, const ChordCircle& b) {
    ChordCircle r;
    r.nodes = a.nodes + b.nodes + 2;
    r.chords = a.chords;
    const int shift = a.nodes + 1;
    for (auto [x, y] : b.chords) r.chords.emplace_back(x + shift, y + shift);
    r.chords.emplace_back(a.nodes + 1, r.nodes);
    std::sort(r.chords.begin(), r.chords.end());
    return r;
}

inline std::optional<std::pair<ChordCircle, ChordCircle>> factorize(const ChordCircle& e) {
    if (e.nodes == 0) return std::nullopt;
    int s = 0;
    for (auto [a, b] : e.chords)
        if (b == e.nodes) s = a;
    ChordCircle p1, p2;
    p1.nodes = s - 1;
    p2.nodes = e.nodes - s - 1;
    for (auto [a, b] : e.chords) {
        if (b < s) p1.chords.emplace_back(a, b);
        else if (a > s && b < e.nodes) p2.chords.emplace_back(a - s, b - s);
    }
    return std::make_pair(p1, p2);
}

inline long long norm(const ChordCircle& e) { return static_cast<long long>(e.chords.size()) + 1; }

inline std::string render(const ChordCircle& e) { return codec::render_pair_list(e.nodes, e.chords); }

inline ChordCircle parse(std::string_view s) {
    auto [nodes, chords] = codec::parse_pair_list(s);
    if (nodes < 0 || nodes % 2 != 0)
        throw parse_error(parse_error::kind::validity, 0, "node count must be even");
    std::vector<int> cover(static_cast<std::size_t>(nodes) + 1, 0);
    for (auto& [a, b] : chords) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > nodes || a == b)
            throw parse_error(parse_error::kind::validity, 0, "chord endpoints must lie in [1, 2k]");
        ++cover[static_cast<std::size_t>(a)];
        ++cover[static_cast<std::size_t>(b)];
    }
    for (int i = 1; i <= nodes; ++i)
        if (cover[static_cast<std::size_t>(i)] != 1)
            throw parse_error(parse_error::kind::validity, 0, "chords must cover every node exactly once");
    for (auto [a, b] : chords)
        for (auto [c, d] : chords)
            if (a < c && c < b && b < d)
                throw parse_error(parse_error::kind::validity, 0, "chords cross");
    std::sort(chords.begin(), chords.end());
    return {nodes, chords};
}

} // namespace catmagma::chords
