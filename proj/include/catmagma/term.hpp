#pragma once

#include "catmagma/counting.hpp"
#include "catmagma/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmagma {

/// 1-based generator index; always 1 for single-generator magmas.
struct GeneratorId {
    int index = 1;
};

enum class Notation { Prefix, Infix, Postfix };

/// Immutable binary tree over generator leaves: the canonical free-magma
/// element (nested pair of the Cartesian magma). Cheap to copy; subtree
/// sharing is an implementation detail invisible through the API.
class Term {
public:
    Term() : Term(make_leaf(1)) {}

    static Term leaf(int gen_index) { return Term(make_leaf(gen_index)); }

    static Term node(const Term& l, const Term& r) {
        return Term(std::make_shared<const Node>(Node{0, l.node_, r.node_, l.norm() + r.norm()}));
    }

    bool is_leaf() const { return node_->left == nullptr; }
    int generator_index() const { return node_->gen; }
    Term left() const { return Term(node_->left); }
    Term right() const { return Term(node_->right); }
    long long norm() const { return node_->norm; }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.node_ == b.node_) return true;
        if (a.node_->norm != b.node_->norm) return false;
        if (a.is_leaf() != b.is_leaf()) return false;
        if (a.is_leaf()) return a.node_->gen == b.node_->gen;
        return a.left() == b.left() && a.right() == b.right();
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        int gen;
        std::shared_ptr<const Node> left, right;
        long long norm;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static std::shared_ptr<const Node> make_leaf(int gen_index) {
        return std::make_shared<const Node>(Node{gen_index, nullptr, nullptr, 1});
    }
    std::shared_ptr<const Node> node_;
};

inline Term term_product(const Term& a, const Term& b) { return Term::node(a, b); }

inline std::optional<std::pair<Term, Term>> term_factorize(const Term& t) {
    if (t.is_leaf()) return std::nullopt;
    return std::make_pair(t.left(), t.right());
}

namespace detail {

inline void append_atom(std::string& out, int gen_index) {
    out += 'e';
    if (gen_index != 1) out += std::to_string(gen_index);
}

inline void render_rec(const Term& t, Notation n, std::string& out) {
    if (t.is_leaf()) {
        append_atom(out, t.generator_index());
        return;
    }
    switch (n) {
    case Notation::Prefix:
        out += '*';
        render_rec(t.left(), n, out);
        render_rec(t.right(), n, out);
        break;
    case Notation::Infix:
        out += '(';
        render_rec(t.left(), n, out);
        out += '*';
        render_rec(t.right(), n, out);
        out += ')';
        break;
    case Notation::Postfix:
        render_rec(t.left(), n, out);
        render_rec(t.right(), n, out);
        out += '*';
        break;
    }
}

struct TermCursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(parse_error::kind::syntax, pos, msg);
    }
    int read_atom() {
        if (done() || peek() != 'e') fail("expected generator atom 'e'");
        ++pos;
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) return 1;
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) fail("generator index out of range");
            ++pos;
        }
        if (v < 1) fail("generator index must be >= 1");
        return static_cast<int>(v);
    }
};

inline Term parse_prefix(TermCursor& c) {
    if (c.done()) c.fail("unexpected end of input");
    if (c.peek() == '*') {
        ++c.pos;
        Term l = parse_prefix(c);
        Term r = parse_prefix(c);
        return Term::node(l, r);
    }
    return Term::leaf(c.read_atom());
}

inline Term parse_infix(TermCursor& c) {
    if (c.done()) c.fail("unexpected end of input");
    if (c.peek() == '(') {
        ++c.pos;
        Term l = parse_infix(c);
        if (c.done() || c.peek() != '*') c.fail("expected '*'");
        ++c.pos;
        Term r = parse_infix(c);
        if (c.done() || c.peek() != ')') c.fail("expected ')'");
        ++c.pos;
        return Term::node(l, r);
    }
    return Term::leaf(c.read_atom());
}

inline Term parse_postfix(TermCursor& c) {
    std::vector<Term> stack;
    while (!c.done()) {
        if (c.peek() == '*') {
            if (stack.size() < 2) c.fail("operator '*' lacks two operands");
            Term r = stack.back();
            stack.pop_back();
            Term l = stack.back();
            stack.pop_back();
            stack.push_back(Term::node(l, r));
            ++c.pos;
        } else {
            stack.push_back(Term::leaf(c.read_atom()));
        }
    }
    if (stack.size() != 1)
        throw parse_error(parse_error::kind::syntax, c.pos, "postfix expression does not reduce to one term");
    return stack.back();
}

} // namespace detail

inline std::string term_render(const Term& t, Notation n) {
    std::string out;
    detail::render_rec(t, n, out);
    return out;
}

inline Term term_parse(std::string_view s, Notation n) {
    if (s.empty()) throw parse_error(parse_error::kind::syntax, 0, "empty term text");
    detail::TermCursor c{s};
    Term t = [&] {
        switch (n) {
        case Notation::Prefix: return detail::parse_prefix(c);
        case Notation::Infix: return detail::parse_infix(c);
        default: return detail::parse_postfix(c);
        }
    }();
    if (!c.done()) c.fail("trailing characters after term");
    return t;
}

/// All terms of the given norm over p generators, sorted by infix rendering.
/// The cap bounds n, not p: it guards the C_{n-1} blowup.
inline std::vector<Term> enumerate_terms(int p, long long n, long long cap = kDefaultNormCap) {
    if (p < 1 || n < 1) throw contract_error("enumerate_terms: need p >= 1, n >= 1");
    if (n > cap) throw contract_error("enumerate_terms: norm " + std::to_string(n) +
                                      " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::vector<Term>> by_norm(static_cast<std::size_t>(n) + 1);
    for (int g = 1; g <= p; ++g) by_norm[1].push_back(Term::leaf(g));
    for (long long m = 2; m <= n; ++m) {
        for (long long k = 1; k < m; ++k)
            for (const Term& l : by_norm[k])
                for (const Term& r : by_norm[m - k]) by_norm[m].push_back(Term::node(l, r));
    }
    std::vector<Term>& out = by_norm[static_cast<std::size_t>(n)];
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return term_render(a, Notation::Infix) < term_render(b, Notation::Infix);
    });
    return out;
}

/// Recursive left/right swap; an involutive anti-isomorphism.
inline Term reverse_term(const Term& t) {
    if (t.is_leaf()) return t;
    return Term::node(reverse_term(t.right()), reverse_term(t.left()));
}

/// Number of right multiplications by a generator in the decomposition,
/// i.e. internal nodes whose right child is a leaf. Additive over products.
inline long long narayana_right(const Term& t) {
    if (t.is_leaf()) return 0;
    return narayana_right(t.left()) + narayana_right(t.right()) + (t.right().is_leaf() ? 1 : 0);
}

/// Replace each leaf's generator index through sigma (1-based).
inline Term relabel_term(const Term& t, const std::vector<int>& sigma) {
    if (t.is_leaf()) {
        int g = t.generator_index();
        if (g < 1 || static_cast<std::size_t>(g) > sigma.size())
            throw contract_error("relabel_term: generator index outside sigma's domain");
        return Term::leaf(sigma[static_cast<std::size_t>(g) - 1]);
    }
    return Term::node(relabel_term(t.left(), sigma), relabel_term(t.right(), sigma));
}

} // namespace catmagma
