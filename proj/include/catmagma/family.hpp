#pragma once

#include "catmagma/element.hpp"
#include "catmagma/families/avoid321.hpp"
#include "catmagma/families/brackets.hpp"
#include "catmagma/families/cartesian.hpp"
#include "catmagma/families/cbt.hpp"
#include "catmagma/families/chords.hpp"
#include "catmagma/families/dyck.hpp"
#include "catmagma/families/floorplan.hpp"
#include "catmagma/families/frieze.hpp"
#include "catmagma/families/matching.hpp"
#include "catmagma/families/ncpart.hpp"
#include "catmagma/families/planar.hpp"
#include "catmagma/families/staircase.hpp"
#include "catmagma/families/tableau.hpp"
#include "catmagma/families/triangulation.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace catmagma {

/// The magma contract of one Catalan family, type-erased over Element.
struct FamilyDescriptor {
    FamilyId id;
    std::string_view code;  // "F8"
    std::string_view alias; // "dyck"
    std::string_view name;
    int generator_count;
    Element (*generator)(GeneratorId);
    Element (*product)(const Element&, const Element&);
    std::optional<std::pair<Element, Element>> (*factorize)(const Element&);
    long long (*norm)(const Element&);
    Element (*parse)(std::string_view);
    std::string (*render)(const Element&);
    bool (*equals)(const Element&, const Element&);
    int (*generator_index)(const Element&); // for irreducibles; 1 for p = 1
};

namespace detail_family {

template <typename Native, auto Gen, auto Prod, auto Fact, auto Norm, auto Parse, auto Render>
constexpr FamilyDescriptor make(FamilyId id, std::string_view code, std::string_view alias,
                                std::string_view name) {
    return FamilyDescriptor{
        id,
        code,
        alias,
        name,
        1,
        +[](GeneratorId g) -> Element {
            if (g.index != 1) throw contract_error("single-generator family");
            return Gen();
        },
        +[](const Element& a, const Element& b) -> Element {
            return Prod(native<Native>(a), native<Native>(b));
        },
        +[](const Element& e) -> std::optional<std::pair<Element, Element>> {
            auto r = Fact(native<Native>(e));
            if (!r) return std::nullopt;
            return std::make_pair(Element(r->first), Element(r->second));
        },
        +[](const Element& e) -> long long { return Norm(native<Native>(e)); },
        +[](std::string_view s) -> Element { return Parse(s); },
        +[](const Element& e) -> std::string { return Render(native<Native>(e)); },
        +[](const Element& a, const Element& b) -> bool {
            return native<Native>(a) == native<Native>(b);
        },
        +[](const Element&) -> int { return 1; },
    };
}

inline Element parse_cartesian1(std::string_view s) { return cartesian::parse(s, 1); }
inline CartesianElem gen_cartesian1() { return cartesian::generator(1); }

} // namespace detail_family

inline const std::array<FamilyDescriptor, 14>& family_registry() {
    using namespace detail_family;
    static const std::array<FamilyDescriptor, 14> reg = {
        make<CartesianElem, gen_cartesian1, cartesian::product, cartesian::factorize,
             cartesian::norm, parse_cartesian1, cartesian::render>(
            FamilyId::cartesian, "F1", "cart", "Cartesian magma (nested pairs)"),
        make<BracketWord, brackets::generator, brackets::product, brackets::factorize,
             brackets::norm, brackets::parse, brackets::render>(
            FamilyId::brackets, "F2", "brackets", "Matching brackets / Dyck words"),
        make<ChordCircle, chords::generator, chords::product, chords::factorize, chords::norm,
             chords::parse, chords::render>(FamilyId::chords, "F3",
                                            "chords", "Non-crossing chords on a marked circle"),
        make<CompleteBinaryTree, cbt::generator, cbt::product, cbt::factorize, cbt::norm,
             cbt::parse, cbt::render>(FamilyId::cbt, "F4", "cbt", "Complete binary trees"),
        make<PlanarTree, planar::generator, planar::product, planar::factorize, planar::norm,
             planar::parse, planar::render>(FamilyId::planar, "F5", "planar", "Planar trees"),
        make<NestedMatching, matching::generator, matching::product, matching::factorize,
             matching::norm, matching::parse, matching::render>(
            FamilyId::matching, "F6", "matching", "Nested matchings / link diagrams"),
        make<NonCrossingPartition, ncpart::generator, ncpart::product, ncpart::factorize,
             ncpart::norm, ncpart::parse, ncpart::render>(
            FamilyId::ncpart, "F7", "ncpart", "Non-crossing partitions"),
        make<DyckPath, dyck::generator, dyck::product, dyck::factorize, dyck::norm, dyck::parse,
             dyck::render>(FamilyId::dyck, "F8", "dyck", "Dyck paths"),
        make<Triangulation, triangulation::generator, triangulation::product,
             triangulation::factorize, triangulation::norm, triangulation::parse,
             triangulation::render>(FamilyId::triangulation, "F9", "triang",
                                    "Polygon triangulations"),
        make<AvoidingPermutation, avoid321::generator, avoid321::product, avoid321::factorize,
             avoid321::norm, avoid321::parse, avoid321::render>(
            FamilyId::avoid321, "F10", "avoid321", "321-avoiding permutations"),
        make<StaircasePolygon, staircase::generator, staircase::product, staircase::factorize,
             staircase::norm, staircase::parse, staircase::render>(
            FamilyId::staircase, "F11", "staircase", "Staircase polygons"),
        make<StandardTableau, tableau::generator, tableau::product, tableau::factorize,
             tableau::norm, tableau::parse, tableau::render>(
            FamilyId::tableau, "F12", "tableau", "Two-row standard tableaux"),
        make<FloorPlan, floorplan::generator, floorplan::product, floorplan::factorize,
             floorplan::norm, floorplan::parse, floorplan::render>(
            FamilyId::floorplan, "F13", "floorplan", "Catalan floor plans"),
        make<FriezeSequence, frieze::generator, frieze::product, frieze::factorize, frieze::norm,
             frieze::parse, frieze::render>(FamilyId::frieze, "F14", "frieze",
                                            "Frieze sequences"),
    };
    return reg;
}

inline const FamilyDescriptor& family(FamilyId id) {
    return family_registry()[static_cast<std::size_t>(id) - 1];
}

/// Look up by code ("F8", case-insensitive) or alias ("dyck").
inline const FamilyDescriptor* find_family(std::string_view token) {
    std::string t(token);
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const FamilyDescriptor& f : family_registry()) {
        std::string code(f.code);
        for (char& c : code) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (t == code || t == f.alias) return &f;
    }
    return nullptr;
}

/// A Cartesian-magma descriptor over P generators. Only this family admits
/// p > 1; the registry entry F1 is its single-generator instance.
template <int P>
inline const FamilyDescriptor& cartesian_family() {
    static_assert(P >= 1);
    static const FamilyDescriptor d = [] {
        FamilyDescriptor f = family(FamilyId::cartesian);
        f.generator_count = P;
        f.generator = +[](GeneratorId g) -> Element {
            if (g.index < 1 || g.index > P)
                throw contract_error("generator index outside the generator set");
            return cartesian::generator(g.index);
        };
        f.parse = +[](std::string_view s) -> Element { return cartesian::parse(s, P); };
        f.generator_index = +[](const Element& e) -> int {
            return native<CartesianElem>(e).term.generator_index();
        };
        return f;
    }();
    return d;
}

} // namespace catmagma
