#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

namespace catmagma::dyck {

inline DyckPath generator() { return {""}; }

/// Right product: d1 u d2 d.
inline DyckPath product(const DyckPath& a, const DyckPath& b) {
    return {a.word + "u" + b.word + "d"};
}

/// Split at the rightmost up step leaving the surface.
inline std::optional<std::pair<DyckPath, DyckPath>> factorize(const DyckPath& e) {
    if (e.word.empty()) return std::nullopt;
    int depth = 0;
    std::size_t i = e.word.size();
    while (i-- > 0) {
        depth += (e.word[i] == 'd') ? 1 : -1;
        if (depth == 0) break;
    }
    return std::make_pair(DyckPath{e.word.substr(0, i)},
                          DyckPath{e.word.substr(i + 1, e.word.size() - i - 2)});
}

inline long long norm(const DyckPath& e) {
    return static_cast<long long>(e.word.size()) / 2 + 1;
}

inline std::string render(const DyckPath& e) { return e.word.empty() ? "_" : e.word; }

inline DyckPath parse(std::string_view s) {
    if (s == "_") return {""};
    long long height = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'u') ++height;
        else if (s[i] == 'd') --height;
        else throw parse_error(parse_error::kind::syntax, i, "expected 'u' or 'd'");
        if (height < 0)
            throw parse_error(parse_error::kind::validity, i, "path steps below the surface");
    }
    if (height != 0)
        throw parse_error(parse_error::kind::validity, s.size(), "path does not return to the surface");
    return {std::string(s)};
}

/// Left product: u d1 d d2, the second free magma on Dyck paths.
inline DyckPath left_product(const DyckPath& a, const DyckPath& b) {
    return {"u" + a.word + "d" + b.word};
}

/// Mirror across a vertical line: reverse the word and swap u with d.
inline DyckPath reflect(const DyckPath& e) {
    std::string w(e.word.rbegin(), e.word.rend());
    for (char& c : w) c = (c == 'u') ? 'd' : 'u';
    return {w};
}

/// Number of peaks (ud factors); carries the right Narayana statistic.
inline long long peaks(const DyckPath& e) {
    long long n = 0;
    for (std::size_t i = 0; i + 1 < e.word.size(); ++i)
        if (e.word[i] == 'u' && e.word[i + 1] == 'd') ++n;
    return n;
}

} // namespace catmagma::dyck
