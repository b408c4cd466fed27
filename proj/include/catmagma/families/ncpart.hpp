#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/codec_util.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmagma::ncpart {

inline NonCrossingPartition generator() { return {0, {}}; }

namespace detail {
inline void canonicalize(NonCrossingPartition& p) {
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}
} // namespace detail

/// One new node x after p1's nodes; x joins the block of p2 holding p2's
/// last node, or stays a singleton when p2 is empty.
inline NonCrossingPartition product(const NonCrossingPartition& a, const NonCrossingPartition& b) {
    NonCrossingPartition r;
    r.nodes = a.nodes + b.nodes + 1;
    r.blocks = a.blocks;
    const int x = a.nodes + 1;
    if (b.nodes == 0) {
        r.blocks.push_back({x});
    } else {
        for (const auto& blk : b.blocks) {
            std::vector<int> nb;
            for (int v : blk) nb.push_back(v + x);
            if (nb.back() == r.nodes) nb.insert(nb.begin(), x);
            r.blocks.push_back(std::move(nb));
        }
    }
    detail::canonicalize(r);
    return r;
}

inline std::optional<std::pair<NonCrossingPartition, NonCrossingPartition>>
factorize(const NonCrossingPartition& e) {
    if (e.nodes == 0) return std::nullopt;
    int x = 0;
    for (const auto& blk : e.blocks)
        if (blk.back() == e.nodes) x = blk.front();
    NonCrossingPartition p1, p2;
    p1.nodes = x - 1;
    p2.nodes = e.nodes - x;
    for (const auto& blk : e.blocks) {
        if (blk.back() < x) {
            p1.blocks.push_back(blk);
        } else if (blk.front() == x) {
            if (blk.size() > 1) {
                std::vector<int> nb(blk.begin() + 1, blk.end());
                for (int& v : nb) v -= x;
                p2.blocks.push_back(std::move(nb));
            }
        } else {
            std::vector<int> nb = blk;
            for (int& v : nb) v -= x;
            p2.blocks.push_back(std::move(nb));
        }
    }
    detail::canonicalize(p1);
    detail::canonicalize(p2);
    return std::make_pair(p1, p2);
}

inline long long norm(const NonCrossingPartition& e) { return e.nodes + 1; }

/// "n:{1,3}{2}" with blocks ordered by minimum; "0:" is the generator.
inline std::string render(const NonCrossingPartition& e) {
    std::string out = std::to_string(e.nodes) + ":";
    for (const auto& blk : e.blocks) out += "{" + codec::join(blk, ',') + "}";
    return out;
}

inline NonCrossingPartition parse(std::string_view s) {
    codec::Cursor c{s};
    NonCrossingPartition p;
    p.nodes = static_cast<int>(c.read_uint("node count"));
    c.expect(':', "after node count");
    while (!c.done()) {
        c.expect('{', "to open block");
        std::vector<int> blk;
        for (long long v : codec::read_uint_list(c, ',', "block member")) blk.push_back(static_cast<int>(v));
        c.expect('}', "to close block");
        p.blocks.push_back(std::move(blk));
    }
    std::vector<int> seen(static_cast<std::size_t>(p.nodes) + 1, 0);
    for (const auto& blk : p.blocks)
        for (int v : blk) {
            if (v < 1 || v > p.nodes)
                throw parse_error(parse_error::kind::validity, 0, "block member out of range");
            ++seen[static_cast<std::size_t>(v)];
        }
    for (int i = 1; i <= p.nodes; ++i)
        if (seen[static_cast<std::size_t>(i)] != 1)
            throw parse_error(parse_error::kind::validity, 0, "blocks must partition 1..n");
    detail::canonicalize(p);
    // crossing test: a < b < c < d with a,c in one block and b,d in another
    std::vector<int> block_of(static_cast<std::size_t>(p.nodes) + 1, -1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (int v : p.blocks[i]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (int a = 1; a <= p.nodes; ++a)
        for (int b = a + 1; b <= p.nodes; ++b)
            for (int cc = b + 1; cc <= p.nodes; ++cc)
                for (int d = cc + 1; d <= p.nodes; ++d)
                    if (block_of[a] == block_of[cc] && block_of[b] == block_of[d] &&
                        block_of[a] != block_of[b])
                        throw parse_error(parse_error::kind::validity, 0, "blocks cross");
    return p;
}

} // namespace catmagma::ncpart
