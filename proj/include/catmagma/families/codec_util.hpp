#pragma once

#include "catmagma/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::codec {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (done() || peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail_syntax(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail_syntax(const std::string& msg) const {
        throw parse_error(parse_error::kind::syntax, pos, msg);
    }
    [[noreturn]] void fail_validity(const std::string& msg) const {
        throw parse_error(parse_error::kind::validity, pos, msg);
    }
    long long read_uint(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail_syntax(std::string("expected number ") + what);
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) fail_syntax("number out of range");
            ++pos;
        }
        return v;
    }
    void expect_done() {
        if (!done()) fail_syntax("trailing characters");
    }
};

inline std::vector<long long> read_uint_list(Cursor& c, char sep, const char* what) {
    std::vector<long long> out;
    out.push_back(c.read_uint(what));
    while (!c.done() && c.peek() == sep) {
        ++c.pos;
        out.push_back(c.read_uint(what));
    }
    return out;
}

inline std::string join(const std::vector<long long>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::string join(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

/// "2k:a-b,c-d" style pair lists used by the chord and matching codecs.
inline std::string render_pair_list(int nodes, const std::vector<std::pair<int, int>>& pairs) {
    std::string out = std::to_string(nodes) + ":";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pairs[i].first) + "-" + std::to_string(pairs[i].second);
    }
    return out;
}

inline std::pair<int, std::vector<std::pair<int, int>>> parse_pair_list(std::string_view s) {
    Cursor c{s};
    long long nodes = c.read_uint("node count");
    c.expect(':', "after node count");
    std::vector<std::pair<int, int>> pairs;
    while (!c.done()) {
        long long a = c.read_uint("pair endpoint");
        c.expect('-', "between pair endpoints");
        long long b = c.read_uint("pair endpoint");
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        if (!c.done()) c.expect(',', "between pairs");
    }
    return {static_cast<int>(nodes), pairs};
}

} // namespace catmagma::codec
