#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace catmagma::planar {

inline PlanarTree generator() { return {}; }

/// t2's root becomes a new rightmost child of t1's root.
inline PlanarTree product(const PlanarTree& a, const PlanarTree& b) {
    PlanarTree r = a;
    r.children.push_back(b);
    return r;
}

inline std::optional<std::pair<PlanarTree, PlanarTree>> factorize(const PlanarTree& e) {
    if (e.children.empty()) return std::nullopt;
    PlanarTree a = e;
    PlanarTree b = a.children.back();
    a.children.pop_back();
    return std::make_pair(a, b);
}

inline long long norm(const PlanarTree& e) {
    long long n = 1;
    for (const PlanarTree& c : e.children) n += norm(c);
    return n;
}

/// "_" for the single node, otherwise the concatenated child list in parens:
/// "(__)" is a root with two leaf children.
inline std::string render(const PlanarTree& e) {
    if (e.children.empty()) return "_";
    std::string out = "(";
    for (const PlanarTree& c : e.children) out += render(c);
    return out + ")";
}

namespace detail {
inline PlanarTree parse_rec(codec::Cursor& c) {
    if (c.done()) c.fail_syntax("unexpected end of input");
    if (c.eat('_')) return {};
    c.expect('(', "to open child list");
    PlanarTree t;
    while (!c.done() && c.peek() != ')') t.children.push_back(parse_rec(c));
    c.expect(')', "to close child list");
    if (t.children.empty()) c.fail_syntax("empty child list; a leaf is written '_'");
    return t;
}
} // namespace detail

inline PlanarTree parse(std::string_view s) {
    codec::Cursor c{s};
    PlanarTree t = detail::parse_rec(c);
    c.expect_done();
    return t;
}

} // namespace catmagma::planar
