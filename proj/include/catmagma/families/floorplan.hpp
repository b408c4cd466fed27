#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::floorplan {

inline FloorPlan generator() { return {0, 0, {}}; }

namespace detail {

struct Wall {
    int coord, lo, hi;
};

/// Maximal straight wall segments perpendicular to the sweep axis; touching
/// collinear segments belong to one wall.
inline std::vector<Wall> collect_walls(const std::vector<Room>& rooms, bool vertical) {
    std::map<int, std::vector<std::pair<int, int>>> segs;
    for (const Room& r : rooms) {
        if (vertical) {
            segs[r.x0].emplace_back(r.y0, r.y1);
            segs[r.x1].emplace_back(r.y0, r.y1);
        } else {
            segs[r.y0].emplace_back(r.x0, r.x1);
            segs[r.y1].emplace_back(r.x0, r.x1);
        }
    }
    std::vector<Wall> walls;
    for (auto& [c, iv] : segs) {
        std::sort(iv.begin(), iv.end());
        int lo = iv[0].first, hi = iv[0].second;
        for (auto [a, b] : iv) {
            if (a > hi) {
                walls.push_back({c, lo, hi});
                lo = a;
                hi = b;
            } else {
                hi = std::max(hi, b);
            }
        }
        walls.push_back({c, lo, hi});
    }
    return walls; // ascending by coordinate
}

inline int wall_at(const std::vector<Wall>& walls, int coord, int lo, int hi) {
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (walls[i].coord == coord && walls[i].lo <= lo && hi <= walls[i].hi)
            return static_cast<int>(i);
    throw contract_error("floorplan: room edge lies on no wall");
}

} // namespace detail

/// Longest-path leveling: each wall's coordinate becomes the length of the
/// longest chain of rooms leading to it. Sliding-invariant because sliding
/// never lets walls pass over one another.
inline FloorPlan canonicalize(const std::vector<Room>& rooms) {
    if (rooms.empty()) return generator();
    const auto vw = detail::collect_walls(rooms, true);
    const auto hw = detail::collect_walls(rooms, false);
    const std::size_t n = rooms.size();
    std::vector<std::pair<int, int>> ve(n), he(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Room& r = rooms[i];
        ve[i] = {detail::wall_at(vw, r.x0, r.y0, r.y1), detail::wall_at(vw, r.x1, r.y0, r.y1)};
        he[i] = {detail::wall_at(hw, r.y0, r.x0, r.x1), detail::wall_at(hw, r.y1, r.x0, r.x1)};
    }
    // Walls are coordinate-sorted and every edge points to a strictly larger
    // coordinate, so one pass in wall order settles the longest paths.
    std::vector<int> vl(vw.size(), 0), hl(hw.size(), 0);
    for (std::size_t w = 0; w < vw.size(); ++w)
        for (std::size_t i = 0; i < n; ++i)
            if (ve[i].second == static_cast<int>(w))
                vl[w] = std::max(vl[w], vl[static_cast<std::size_t>(ve[i].first)] + 1);
    for (std::size_t w = 0; w < hw.size(); ++w)
        for (std::size_t i = 0; i < n; ++i)
            if (he[i].second == static_cast<int>(w))
                hl[w] = std::max(hl[w], hl[static_cast<std::size_t>(he[i].first)] + 1);
    FloorPlan f;
    for (std::size_t i = 0; i < n; ++i)
        f.rooms.push_back({vl[static_cast<std::size_t>(ve[i].first)],
                           hl[static_cast<std::size_t>(he[i].first)],
                           vl[static_cast<std::size_t>(ve[i].second)],
                           hl[static_cast<std::size_t>(he[i].second)]});
    f.width = *std::max_element(vl.begin(), vl.end());
    f.height = *std::max_element(hl.begin(), hl.end());
    std::sort(f.rooms.begin(), f.rooms.end());
    return f;
}

/// f1 spans the full bottom, f2 sits top-right, and one new room spans the
/// left side of f2. Exact integer coordinates, then releveled.
inline FloorPlan product(const FloorPlan& a, const FloorPlan& b) {
    std::vector<Room> rooms;
    if (a.rooms.empty() && b.rooms.empty()) {
        rooms.push_back({0, 0, 1, 1});
    } else if (a.rooms.empty()) {
        rooms.push_back({0, 0, 1, b.height});
        for (const Room& r : b.rooms) rooms.push_back({r.x0 + 1, r.y0, r.x1 + 1, r.y1});
    } else if (b.rooms.empty()) {
        rooms = a.rooms;
        rooms.push_back({0, a.height, a.width, a.height + 1});
    } else {
        const int sa = 1 + b.width; // widths a.width*(1+b.width) agree on both bands
        for (const Room& r : a.rooms) rooms.push_back({r.x0 * sa, r.y0, r.x1 * sa, r.y1});
        rooms.push_back({0, a.height, a.width, a.height + b.height});
        for (const Room& r : b.rooms)
            rooms.push_back({(r.x0 + 1) * a.width, r.y0 + a.height, (r.x1 + 1) * a.width,
                             r.y1 + a.height});
    }
    return canonicalize(rooms);
}

/// Split at the top-left room: its bottom wall must span the full width and
/// its right wall must reach the top.
inline std::optional<std::pair<FloorPlan, FloorPlan>> factorize(const FloorPlan& e) {
    if (e.rooms.empty()) return std::nullopt;
    const Room* top_left = nullptr;
    for (const Room& r : e.rooms)
        if (r.x0 == 0 && r.y1 == e.height) top_left = &r;
    if (!top_left) throw contract_error("floorplan: no top-left corner room");
    const int ys = top_left->y0;
    std::vector<Room> below, above;
    for (const Room& r : e.rooms) {
        if (&r == top_left) continue;
        if (r.y1 <= ys) below.push_back(r);
        else if (r.y0 >= ys && r.x0 >= top_left->x1)
            above.push_back({r.x0 - top_left->x1, r.y0 - ys, r.x1 - top_left->x1, r.y1 - ys});
        else throw contract_error("floorplan: top-left room does not split the plan");
    }
    if (below.empty() && ys != 0)
        throw contract_error("floorplan: nothing beneath the split line");
    if (above.empty() && top_left->x1 != e.width)
        throw contract_error("floorplan: top-left room leaves an untiled gap");
    return std::make_pair(canonicalize(below), canonicalize(above));
}

inline long long norm(const FloorPlan& e) { return static_cast<long long>(e.rooms.size()) + 1; }

inline std::string render(const FloorPlan& e) {
    if (e.rooms.empty()) return "_";
    std::string out = std::to_string(e.width) + "," + std::to_string(e.height) + ":";
    for (std::size_t i = 0; i < e.rooms.size(); ++i) {
        const Room& r = e.rooms[i];
        if (i) out += ';';
        out += std::to_string(r.x0) + "-" + std::to_string(r.x1) + "," + std::to_string(r.y0) +
               "-" + std::to_string(r.y1);
    }
    return out;
}

/// Structural validity: a plan is a member exactly when it decomposes all
/// the way down and remultiplies to itself.
inline bool is_member(const FloorPlan& e) {
    if (e.rooms.empty()) return true;
    try {
        auto parts = factorize(e);
        if (!is_member(parts->first) || !is_member(parts->second)) return false;
        return product(parts->first, parts->second) == e;
    } catch (const contract_error&) {
        return false;
    }
}

inline FloorPlan parse(std::string_view s) {
    if (s == "_") return generator();
    codec::Cursor c{s};
    FloorPlan f;
    f.width = static_cast<int>(c.read_uint("width"));
    c.expect(',', "between width and height");
    f.height = static_cast<int>(c.read_uint("height"));
    c.expect(':', "after the bounding box");
    while (!c.done()) {
        Room r;
        r.x0 = static_cast<int>(c.read_uint("room x0"));
        c.expect('-', "in room x range");
        r.x1 = static_cast<int>(c.read_uint("room x1"));
        c.expect(',', "between room ranges");
        r.y0 = static_cast<int>(c.read_uint("room y0"));
        c.expect('-', "in room y range");
        r.y1 = static_cast<int>(c.read_uint("room y1"));
        f.rooms.push_back(r);
        if (!c.done()) c.expect(';', "between rooms");
    }
    if (f.rooms.empty())
        throw parse_error(parse_error::kind::validity, 0, "a nonempty plan needs rooms");
    long long area = 0;
    for (const Room& r : f.rooms) {
        if (r.x0 >= r.x1 || r.y0 >= r.y1 || r.x0 < 0 || r.y0 < 0 || r.x1 > f.width || r.y1 > f.height)
            throw parse_error(parse_error::kind::validity, 0, "room outside the bounding box");
        area += static_cast<long long>(r.x1 - r.x0) * (r.y1 - r.y0);
    }
    for (std::size_t i = 0; i < f.rooms.size(); ++i)
        for (std::size_t j = i + 1; j < f.rooms.size(); ++j) {
            const Room &a = f.rooms[i], &b = f.rooms[j];
            if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1)
                throw parse_error(parse_error::kind::validity, 0, "rooms overlap");
        }
    if (area != static_cast<long long>(f.width) * f.height)
        throw parse_error(parse_error::kind::validity, 0, "rooms do not tile the bounding box");
    std::sort(f.rooms.begin(), f.rooms.end());
    if (canonicalize(f.rooms) != f)
        throw parse_error(parse_error::kind::validity, 0, "plan is not in canonical leveled form");
    if (!is_member(f))
        throw parse_error(parse_error::kind::validity, 0,
                          "plan violates the junction rules (not decomposable)");
    return f;
}

} // namespace catmagma::floorplan
