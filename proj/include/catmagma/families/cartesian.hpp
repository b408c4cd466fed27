#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace catmagma::cartesian {

inline CartesianElem generator(int gen_index = 1) { return {Term::leaf(gen_index)}; }

inline CartesianElem product(const CartesianElem& a, const CartesianElem& b) {
    return {Term::node(a.term, b.term)};
}

inline std::optional<std::pair<CartesianElem, CartesianElem>> factorize(const CartesianElem& e) {
    if (e.term.is_leaf()) return std::nullopt;
    return std::make_pair(CartesianElem{e.term.left()}, CartesianElem{e.term.right()});
}

inline long long norm(const CartesianElem& e) { return e.term.norm(); }

/// Nested-pair codec: "(e,(e,e))" with atoms e, e2, e3, ...
inline std::string render(const CartesianElem& e) {
    if (e.term.is_leaf()) {
        std::string out;
        detail::append_atom(out, e.term.generator_index());
        return out;
    }
    return "(" + render({e.term.left()}) + "," + render({e.term.right()}) + ")";
}

namespace detail2 {
inline Term parse_rec(codec::Cursor& c, int generator_count) {
    if (c.done()) c.fail_syntax("unexpected end of input");
    if (c.eat('(')) {
        Term l = parse_rec(c, generator_count);
        c.expect(',', "between pair components");
        Term r = parse_rec(c, generator_count);
        c.expect(')', "to close pair");
        return Term::node(l, r);
    }
    if (!c.eat('e')) c.fail_syntax("expected atom 'e'");
    int idx = 1;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        idx = static_cast<int>(c.read_uint("generator index"));
    if (idx < 1 || idx > generator_count) c.fail_validity("generator index outside the generator set");
    return Term::leaf(idx);
}
} // namespace detail2

inline CartesianElem parse(std::string_view s, int generator_count = 1) {
    codec::Cursor c{s};
    Term t = detail2::parse_rec(c, generator_count);
    c.expect_done();
    return {t};
}

} // namespace catmagma::cartesian
