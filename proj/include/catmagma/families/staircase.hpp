#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::staircase {

inline StaircasePolygon generator() { return {{}, {}}; }

/// Every column of the right factor gains a cell at the bottom, then the
/// left factor is glued on with a one-cell neck (nothing is glued when it
/// is the edge generator).
inline StaircasePolygon product(const StaircasePolygon& a, const StaircasePolygon& b) {
    StaircasePolygon lifted;
    if (b.heights.empty()) {
        lifted.heights = {1};
    } else {
        lifted = b;
        for (int& h : lifted.heights) ++h;
        for (int& o : lifted.overlaps) ++o;
    }
    if (a.heights.empty()) return lifted;
    StaircasePolygon r = a;
    r.overlaps.push_back(1);
    r.heights.insert(r.heights.end(), lifted.heights.begin(), lifted.heights.end());
    r.overlaps.insert(r.overlaps.end(), lifted.overlaps.begin(), lifted.overlaps.end());
    return r;
}

/// Cut at the rightmost neck (rightmost overlap equal to one; the left
/// boundary counts as an implicit neck).
inline std::optional<std::pair<StaircasePolygon, StaircasePolygon>>
factorize(const StaircasePolygon& e) {
    if (e.heights.empty()) return std::nullopt;
    int cut = -1; // overlap index; -1 means the implicit left boundary neck
    for (int i = static_cast<int>(e.overlaps.size()) - 1; i >= 0; --i)
        if (e.overlaps[i] == 1) {
            cut = i;
            break;
        }
    StaircasePolygon a, b;
    if (cut >= 0) {
        a.heights.assign(e.heights.begin(), e.heights.begin() + cut + 1);
        a.overlaps.assign(e.overlaps.begin(), e.overlaps.begin() + cut);
    }
    b.heights.assign(e.heights.begin() + cut + 1, e.heights.end());
    b.overlaps.assign(e.overlaps.begin() + std::min<std::size_t>(cut + 1, e.overlaps.size()),
                      e.overlaps.end());
    for (int& h : b.heights) --h;
    for (int& o : b.overlaps) --o;
    if (b.heights.size() == 1 && b.heights[0] == 0) b = generator();
    return std::make_pair(a, b);
}

/// Steps in one bounding binomial path: columns plus total height.
inline long long norm(const StaircasePolygon& e) {
    if (e.heights.empty()) return 1;
    long long total = e.heights[0];
    for (std::size_t i = 1; i < e.heights.size(); ++i) total += e.heights[i] - e.overlaps[i - 1];
    return static_cast<long long>(e.heights.size()) + total;
}

inline std::string render(const StaircasePolygon& e) {
    if (e.heights.empty()) return "_";
    return codec::join(e.heights, ',') + ";" + codec::join(e.overlaps, ',');
}

inline StaircasePolygon parse(std::string_view s) {
    if (s == "_") return generator();
    codec::Cursor c{s};
    StaircasePolygon p;
    for (long long v : codec::read_uint_list(c, ',', "column height")) p.heights.push_back(static_cast<int>(v));
    c.expect(';', "between heights and overlaps");
    if (!c.done())
        for (long long v : codec::read_uint_list(c, ',', "overlap")) p.overlaps.push_back(static_cast<int>(v));
    c.expect_done();
    if (p.overlaps.size() + 1 != p.heights.size())
        throw parse_error(parse_error::kind::validity, 0, "need one overlap between adjacent columns");
    for (int h : p.heights)
        if (h < 1) throw parse_error(parse_error::kind::validity, 0, "column heights must be positive");
    for (std::size_t i = 0; i < p.overlaps.size(); ++i)
        if (p.overlaps[i] < 1 || p.overlaps[i] > std::min(p.heights[i], p.heights[i + 1]))
            throw parse_error(parse_error::kind::validity, 0,
                              "overlap must lie between 1 and the adjacent column heights");
    return p;
}

} // namespace catmagma::staircase
