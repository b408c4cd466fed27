#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace catmagma::cbt {

inline CompleteBinaryTree generator() { return {Term::leaf(1)}; }

inline CompleteBinaryTree product(const CompleteBinaryTree& a, const CompleteBinaryTree& b) {
    return {Term::node(a.shape, b.shape)};
}

inline std::optional<std::pair<CompleteBinaryTree, CompleteBinaryTree>>
factorize(const CompleteBinaryTree& e) {
    if (e.shape.is_leaf()) return std::nullopt;
    return std::make_pair(CompleteBinaryTree{e.shape.left()}, CompleteBinaryTree{e.shape.right()});
}

inline long long norm(const CompleteBinaryTree& e) { return e.shape.norm(); }

/// "(*,(*,*))": leaves are '*', internal nodes are pairs.
inline std::string render(const CompleteBinaryTree& e) {
    if (e.shape.is_leaf()) return "*";
    return "(" + render({e.shape.left()}) + "," + render({e.shape.right()}) + ")";
}

namespace detail {
inline Term parse_rec(codec::Cursor& c) {
    if (c.done()) c.fail_syntax("unexpected end of input");
    if (c.eat('*')) return Term::leaf(1);
    c.expect('(', "to open node");
    Term l = parse_rec(c);
    c.expect(',', "between children");
    Term r = parse_rec(c);
    c.expect(')', "to close node");
    return Term::node(l, r);
}
} // namespace detail

inline CompleteBinaryTree parse(std::string_view s) {
    codec::Cursor c{s};
    Term t = detail::parse_rec(c);
    c.expect_done();
    return {t};
}

/// Recursive left/right subtree swap; coincides with the reverse transport.
inline CompleteBinaryTree reflect(const CompleteBinaryTree& e) { return {reverse_term(e.shape)}; }

} // namespace catmagma::cbt
