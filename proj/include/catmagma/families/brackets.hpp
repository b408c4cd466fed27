#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace catmagma::brackets {

inline BracketWord generator() { return {""}; }

/// b1 * b2 = b1 { b2 }
inline BracketWord product(const BracketWord& a, const BracketWord& b) {
    return {a.word + "{" + b.word + "}"};
}

inline std::optional<std::pair<BracketWord, BracketWord>> factorize(const BracketWord& e) {
    if (e.word.empty()) return std::nullopt;
    // The final '}' matches the '{' opening the right factor.
    int depth = 0;
    std::size_t i = e.word.size();
    while (i-- > 0) {
        depth += (e.word[i] == '}') ? 1 : -1;
        if (depth == 0) break;
    }
    return std::make_pair(BracketWord{e.word.substr(0, i)},
                          BracketWord{e.word.substr(i + 1, e.word.size() - i - 2)});
}

inline long long norm(const BracketWord& e) {
    return static_cast<long long>(e.word.size()) / 2 + 1;
}

inline std::string render(const BracketWord& e) { return e.word.empty() ? "_" : e.word; }

inline BracketWord parse(std::string_view s) {
    if (s == "_") return {""};
    long long depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        else if (s[i] == '}') --depth;
        else throw parse_error(parse_error::kind::syntax, i, "expected '{' or '}'");
        if (depth < 0)
            throw parse_error(parse_error::kind::validity, i, "unmatched closing bracket");
    }
    if (depth != 0)
        throw parse_error(parse_error::kind::validity, s.size(), "unbalanced brackets");
    return {std::string(s)};
}

} // namespace catmagma::brackets
