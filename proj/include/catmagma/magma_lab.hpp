#pragma once

#include "catmagma/errors.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace catmagma {

/// An N x N prefix of a product table on the positive integers. Tables built
/// by diagonal_table carry their generative rule, so questions about the
/// infinite extension stay answerable; tables read from a file do not.
struct FiniteMagmaTable {
    struct DiagonalRule {
        long long start; // first counter value, placed at (1,1) unless overridden
        // cells outside the consecutive numbering; the counter does not advance
        std::map<std::pair<int, int>, long long> skips;
        // cells whose consecutive value is overwritten; the counter advances
        std::map<std::pair<int, int>, long long> replacements;
    };

    int size = 0;
    std::vector<std::vector<long long>> entries; // entries[i-1][j-1] = i * j
    std::optional<DiagonalRule> rule;

    long long at(int i, int j) const { return entries[static_cast<std::size_t>(i) - 1]
                                                      [static_cast<std::size_t>(j) - 1]; }
};

namespace magma_lab_detail {

/// Walk the north-east diagonals of the infinite table, low row first inside
/// each diagonal, reporting every cell whose value is <= bound.
template <typename Fn>
inline void walk_rule(const FiniteMagmaTable::DiagonalRule& rule, long long bound, Fn&& fn) {
    long long counter = rule.start;
    long long pinned_left = 0;
    for (const auto& [cell, v] : rule.skips)
        if (v <= bound) ++pinned_left;
    for (const auto& [cell, v] : rule.replacements)
        if (v <= bound) ++pinned_left;
    for (int d = 2; counter <= bound || pinned_left > 0; ++d) {
        for (int i = d - 1; i >= 1; --i) {
            const int j = d - i;
            auto sk = rule.skips.find({i, j});
            if (sk != rule.skips.end()) {
                if (sk->second <= bound) {
                    fn(i, j, sk->second);
                    --pinned_left;
                }
                continue;
            }
            auto rp = rule.replacements.find({i, j});
            if (rp != rule.replacements.end()) {
                ++counter; // the consecutive value is overwritten and never appears
                if (rp->second <= bound) {
                    fn(i, j, rp->second);
                    --pinned_left;
                }
                continue;
            }
            if (counter <= bound) fn(i, j, counter);
            ++counter;
        }
    }
}

} // namespace magma_lab_detail

/// The three example tables: consecutive integers along north-east
/// diagonals, with a handful of cells pinned to break or keep the
/// factorization properties.
inline FiniteMagmaTable diagonal_table(char variant, int size) {
    if (size < 6) throw contract_error("diagonal_table: size must be >= 6");
    FiniteMagmaTable t;
    t.size = size;
    FiniteMagmaTable::DiagonalRule rule;
    switch (variant) {
    case 'a':
        rule.start = 5;
        rule.skips = {{{1, 4}, 3}, {{2, 3}, 4}, {{3, 2}, 4}};
        break;
    case 'b': // variant c with one consecutive value overwritten: 8 vanishes, 3 doubles
        rule.start = 3;
        rule.skips = {{{2, 2}, 1}};
        rule.replacements = {{{4, 1}, 3}};
        break;
    case 'c':
        rule.start = 3;
        rule.skips = {{{2, 2}, 1}};
        break;
    default:
        throw contract_error("diagonal_table: variant must be a, b or c");
    }
    t.entries.assign(static_cast<std::size_t>(size), std::vector<long long>(static_cast<std::size_t>(size), 0));
    long long counter = rule.start;
    for (int d = 2; d <= 2 * size; ++d) {
        for (int i = d - 1; i >= 1; --i) {
            const int j = d - i;
            long long v;
            if (auto sk = rule.skips.find({i, j}); sk != rule.skips.end()) v = sk->second;
            else if (auto rp = rule.replacements.find({i, j}); rp != rule.replacements.end()) {
                v = rp->second;
                ++counter;
            } else v = counter++;
            if (i <= size && j <= size)
                t.entries[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = v;
        }
    }
    t.rule = rule;
    return t;
}

/// File format: first line N, then N rows of N positive integers.
inline FiniteMagmaTable table_from_stream(std::istream& in) {
    FiniteMagmaTable t;
    if (!(in >> t.size) || t.size < 1) throw contract_error("table: bad size line");
    t.entries.assign(static_cast<std::size_t>(t.size),
                     std::vector<long long>(static_cast<std::size_t>(t.size), 0));
    for (auto& row : t.entries)
        for (long long& v : row) {
            if (!(in >> v) || v < 1) throw contract_error("table: entries must be positive integers");
        }
    return t;
}

/// Every cell with value <= bound, from the rule when present, else from
/// the stored prefix.
inline std::map<long long, std::vector<std::pair<int, int>>>
value_cells(const FiniteMagmaTable& t, long long bound) {
    std::map<long long, std::vector<std::pair<int, int>>> cells;
    if (t.rule) {
        magma_lab_detail::walk_rule(*t.rule, bound,
                                    [&](int i, int j, long long v) { cells[v].emplace_back(i, j); });
    } else {
        for (int i = 1; i <= t.size; ++i)
            for (int j = 1; j <= t.size; ++j)
                if (t.at(i, j) <= bound) cells[t.at(i, j)].emplace_back(i, j);
    }
    return cells;
}

/// Integers <= bound that are not in the (extended) range of the product.
inline std::set<long long> find_irreducibles(const FiniteMagmaTable& t, long long bound) {
    auto cells = value_cells(t, bound);
    std::set<long long> irr;
    for (long long v = 1; v <= bound; ++v)
        if (!cells.count(v)) irr.insert(v);
    return irr;
}

struct UniqueFactorizationReport {
    bool unique = true;
    long long duplicate_value = 0;
    std::pair<int, int> cell_a{0, 0}, cell_b{0, 0};
};

/// Injectivity of the product map: fails exactly when a value occupies two
/// cells.
inline UniqueFactorizationReport check_unique_factorization(const FiniteMagmaTable& t) {
    long long bound;
    if (t.rule) {
        // counter values never repeat, so duplicates involve pinned values
        bound = t.rule->start;
        for (const auto& [cell, v] : t.rule->skips) bound = std::max(bound, v + 1);
        for (const auto& [cell, v] : t.rule->replacements) bound = std::max(bound, v + 1);
    } else {
        bound = 0;
        for (int i = 1; i <= t.size; ++i)
            for (int j = 1; j <= t.size; ++j) bound = std::max(bound, t.at(i, j));
    }
    for (const auto& [v, cs] : value_cells(t, bound))
        if (cs.size() > 1) return {false, v, cs[0], cs[1]};
    return {};
}

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown-at-bound";
    }
}

struct FiniteDecompositionReport {
    Verdict verdict = Verdict::yes;
    std::vector<long long> cycle; // witness when verdict == no
};

/// Does every factorization chain of values <= bound terminate at
/// irreducibles? A cycle in the value -> factor graph is a definite no;
/// chains leaving the visible table of a rule-less prefix give unknown.
inline FiniteDecompositionReport check_finite_decomposition(const FiniteMagmaTable& t,
                                                            long long bound) {
    auto cells = value_cells(t, bound);
    enum { White, Grey, Black };
    std::map<long long, int> color;
    bool escaped = false;
    std::vector<long long> stack, cycle;

    auto factors_known = [&](long long v) {
        return cells.count(v) || t.rule /* rule: absent value is irreducible */;
    };

    std::function<bool(long long)> dfs = [&](long long v) -> bool { // true = cycle found
        auto it = cells.find(v);
        if (it == cells.end()) {
            if (!factors_known(v)) escaped = true;
            return false; // irreducible or indeterminate
        }
        color[v] = Grey;
        stack.push_back(v);
        for (const auto& [i, j] : it->second) {
            for (long long f : {static_cast<long long>(i), static_cast<long long>(j)}) {
                if (f > bound) {
                    escaped = true;
                    continue;
                }
                int c = color.count(f) ? color[f] : White;
                if (c == Grey) {
                    auto pos = std::find(stack.begin(), stack.end(), f);
                    cycle.assign(pos, stack.end());
                    return true;
                }
                if (c == White && dfs(f)) return true;
            }
        }
        stack.pop_back();
        color[v] = Black;
        return false;
    };

    for (long long v = 1; v <= bound; ++v) {
        if ((!color.count(v) || color[v] == White) && dfs(v))
            return {Verdict::no, cycle};
    }
    if (escaped) return {Verdict::unknown, {}};
    return {Verdict::yes, {}};
}

struct DerivedNorm {
    std::map<long long, long long> norm;
    // every factorization of every value gave the same sum; guaranteed for
    // unique factorization tables
    bool additive = true;
};

/// Norm synthesis: irreducibles weigh one, a reducible value weighs the
/// largest factor sum over its factorizations. Super-additive by
/// construction; additive exactly when all factorizations agree.
inline DerivedNorm derive_norm(const FiniteMagmaTable& t, long long bound) {
    auto fd = check_finite_decomposition(t, bound);
    if (fd.verdict != Verdict::yes)
        throw contract_error("derive_norm: table is not finite decomposition at this bound");
    auto cells = value_cells(t, bound);
    DerivedNorm out;
    std::function<long long(long long)> eval = [&](long long v) -> long long {
        auto done = out.norm.find(v);
        if (done != out.norm.end()) return done->second;
        auto it = cells.find(v);
        if (it == cells.end()) return out.norm[v] = 1; // irreducible
        long long value = -1;
        for (const auto& [i, j] : it->second) {
            long long cand = eval(i) + eval(j);
            if (value != -1 && cand != value) out.additive = false;
            value = std::max(value, cand);
        }
        return out.norm[v] = value;
    };
    for (long long v = 1; v <= bound; ++v) eval(v);
    return out;
}

struct Classification {
    bool unique_factorization = false;
    Verdict finite_decomposition = Verdict::unknown;
    std::set<long long> irreducibles;
};

inline Classification classify(const FiniteMagmaTable& t, long long bound) {
    Classification c;
    c.unique_factorization = check_unique_factorization(t).unique;
    c.finite_decomposition = check_finite_decomposition(t, bound).verdict;
    c.irreducibles = find_irreducibles(t, bound);
    return c;
}

} // namespace catmagma
