#pragma once

#include "catmagma/term.hpp"

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace catmagma {

enum class FamilyId {
    cartesian = 1, // F1
    brackets,      // F2
    chords,        // F3
    cbt,           // F4
    planar,        // F5
    matching,      // F6
    ncpart,        // F7
    dyck,          // F8
    triangulation, // F9
    avoid321,      // F10
    staircase,     // F11
    tableau,       // F12
    floorplan,     // F13
    frieze,        // F14
};

// --- native representations -------------------------------------------------

/// F1: nested pairs over generator atoms.
struct CartesianElem {
    Term term;
    friend bool operator==(const CartesianElem& a, const CartesianElem& b) { return a.term == b.term; }
};

/// F2: balanced word over '{', '}'. Empty word is the generator.
struct BracketWord {
    std::string word;
    friend bool operator==(const BracketWord&, const BracketWord&) = default;
};

/// F3: marked circle, nodes 1..2k counter-clockwise from the mark, fully
/// matched by non-crossing chords (sorted, first < second).
struct ChordCircle {
    int nodes = 0;
    std::vector<std::pair<int, int>> chords;
    friend bool operator==(const ChordCircle&, const ChordCircle&) = default;
};

/// F4: complete binary tree; only the shape matters, kept as a Term with
/// unit generator indices.
struct CompleteBinaryTree {
    Term shape;
    friend bool operator==(const CompleteBinaryTree& a, const CompleteBinaryTree& b) {
        return a.shape == b.shape;
    }
};

/// F5: rooted ordered tree; the single node is the generator.
struct PlanarTree {
    std::vector<PlanarTree> children;
    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

/// F6: 2n nodes on a line (node 2n virtual), n-1 non-crossing arcs covering
/// nodes 2..2n-1 exactly (sorted, first < second).
struct NestedMatching {
    int nodes = 2;
    std::vector<std::pair<int, int>> arcs;
    friend bool operator==(const NestedMatching&, const NestedMatching&) = default;
};

/// F7: marked circle with n nodes counter-clockwise from the mark carrying a
/// non-crossing partition. Blocks sorted ascending, ordered by minimum.
struct NonCrossingPartition {
    int nodes = 0;
    std::vector<std::vector<int>> blocks;
    friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;
};

/// F8: word over 'u', 'd'; empty word is the generator (single vertex).
struct DyckPath {
    std::string word;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// F9: triangulated n-gon, vertices 1..n counter-clockwise from the marked
/// vertex; n = 2 is the edge generator. Chords sorted, first < second.
struct Triangulation {
    int n = 2;
    std::vector<std::pair<int, int>> chords;
    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// F10: 321-avoiding permutation in one-line form, perm[i] = sigma_{i+1}.
struct AvoidingPermutation {
    std::vector<int> perm;
    friend bool operator==(const AvoidingPermutation&, const AvoidingPermutation&) = default;
};

/// F11: staircase polygon as column heights plus overlaps between adjacent
/// columns; empty heights is the edge generator.
struct StaircasePolygon {
    std::vector<int> heights;
    std::vector<int> overlaps;
    friend bool operator==(const StaircasePolygon&, const StaircasePolygon&) = default;
};

/// F12: two-row standard tableau; both rows increasing, top[i] < bottom[i].
struct StandardTableau {
    std::vector<int> top, bottom;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

struct Room {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    friend bool operator==(const Room&, const Room&) = default;
    friend auto operator<=>(const Room&, const Room&) = default;
};

/// F13: floor plan in canonical leveled coordinates; rooms tile
/// [0,width] x [0,height] and are kept sorted. No rooms is the generator.
struct FloorPlan {
    int width = 0, height = 0;
    std::vector<Room> rooms;
    friend bool operator==(const FloorPlan&, const FloorPlan&) = default;
};

/// F14: frieze sequence; the generator is (0,0).
struct FriezeSequence {
    std::vector<long long> seq{0, 0};
    friend bool operator==(const FriezeSequence&, const FriezeSequence&) = default;
};

using Element = std::variant<CartesianElem, BracketWord, ChordCircle, CompleteBinaryTree,
                             PlanarTree, NestedMatching, NonCrossingPartition, DyckPath,
                             Triangulation, AvoidingPermutation, StaircasePolygon,
                             StandardTableau, FloorPlan, FriezeSequence>;

template <typename Native>
const Native& native(const Element& e) {
    const Native* p = std::get_if<Native>(&e);
    if (!p) throw contract_error("element does not belong to the expected family");
    return *p;
}

} // namespace catmagma
