#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::triangulation {

inline Triangulation generator() { return {2, {}}; }

namespace detail {
inline bool has_chord(const Triangulation& t, int a, int b) {
    if (a > b) std::swap(a, b);
    return std::find(t.chords.begin(), t.chords.end(), std::make_pair(a, b)) != t.chords.end();
}
/// Boundary edge or chord of the polygon.
inline bool has_edge(const Triangulation& t, int a, int b) {
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 1 && b == t.n)) return true;
    return has_chord(t, a, b);
}
} // namespace detail

/// Glue t2 after t1: t1 keeps vertices 1..n1, t2's marked vertex merges
/// into n1, and the closing edge (1, n1+n2-1) becomes the new boundary.
inline Triangulation product(const Triangulation& a, const Triangulation& b) {
    Triangulation r;
    r.n = a.n + b.n - 1;
    r.chords = a.chords;
    if (a.n >= 3) r.chords.emplace_back(1, a.n);
    if (b.n >= 3) r.chords.emplace_back(a.n, r.n);
    const int shift = a.n - 1;
    for (auto [x, y] : b.chords) r.chords.emplace_back(x + shift, y + shift);
    std::sort(r.chords.begin(), r.chords.end());
    return r;
}

/// Split on the triangle that sits on the boundary edge (1, n).
inline std::optional<std::pair<Triangulation, Triangulation>> factorize(const Triangulation& e) {
    if (e.n == 2) return std::nullopt;
    int v = 0;
    for (int cand = 2; cand <= e.n - 1; ++cand)
        if (detail::has_edge(e, 1, cand) && detail::has_edge(e, cand, e.n)) {
            v = cand;
            break;
        }
    Triangulation a, b;
    a.n = v;
    b.n = e.n - v + 1;
    for (auto [x, y] : e.chords) {
        if (y <= v && !(x == 1 && y == v)) a.chords.emplace_back(x, y);
        else if (x >= v && !(x == v && y == e.n)) b.chords.emplace_back(x - v + 1, y - v + 1);
    }
    return std::make_pair(a, b);
}

inline long long norm(const Triangulation& e) { return e.n - 1; }

inline std::string render(const Triangulation& e) { return codec::render_pair_list(e.n, e.chords); }

inline Triangulation parse(std::string_view s) {
    auto [n, chords] = codec::parse_pair_list(s);
    if (n < 2) throw parse_error(parse_error::kind::validity, 0, "polygon needs at least 2 vertices");
    for (auto& [a, b] : chords) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n)
            throw parse_error(parse_error::kind::validity, 0, "chord endpoint out of range");
        if (b - a < 2 || (a == 1 && b == n))
            throw parse_error(parse_error::kind::validity, 0, "chord must be a diagonal");
    }
    std::sort(chords.begin(), chords.end());
    if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
        throw parse_error(parse_error::kind::validity, 0, "duplicate chord");
    if (static_cast<int>(chords.size()) != std::max(0, n - 3))
        throw parse_error(parse_error::kind::validity, 0, "a triangulated n-gon has n-3 chords");
    for (auto [a, b] : chords)
        for (auto [c, d] : chords)
            if (a < c && c < b && b < d)
                throw parse_error(parse_error::kind::validity, 0, "chords cross");
    return {n, chords};
}

/// Vertex degrees less one, read counter-clockwise from the marked vertex.
inline FriezeSequence to_frieze(const Triangulation& t) {
    if (t.n == 2) return {{0, 0}};
    std::vector<long long> deg(static_cast<std::size_t>(t.n), 2);
    for (auto [a, b] : t.chords) {
        ++deg[static_cast<std::size_t>(a - 1)];
        ++deg[static_cast<std::size_t>(b - 1)];
    }
    for (long long& d : deg) --d;
    return {deg};
}

} // namespace catmagma::triangulation
