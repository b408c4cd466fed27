#include "catmagma/catmagma.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace catmagma;

namespace {
Element parse(FamilyId id, const std::string& s) { return family(id).parse(s); }
std::string rt(FamilyId id, const std::string& s) { return family(id).render(parse(id, s)); }
std::string prod(FamilyId id, const std::string& a, const std::string& b) {
    const FamilyDescriptor& f = family(id);
    return f.render(f.product(f.parse(a), f.parse(b)));
}
long long norm_of(FamilyId id, const std::string& s) { return family(id).norm(parse(id, s)); }
} // namespace

TEST_CASE("registry lookup") {
    CHECK(find_family("F8") == &family(FamilyId::dyck));
    CHECK(find_family("f8") == &family(FamilyId::dyck));
    CHECK(find_family("dyck") == &family(FamilyId::dyck));
    CHECK(find_family("frieze") == &family(FamilyId::frieze));
    CHECK(find_family("nosuch") == nullptr);
    for (const FamilyDescriptor& f : family_registry()) CHECK(f.generator_count == 1);
}

TEST_CASE("brackets") {
    CHECK(rt(FamilyId::brackets, "_") == "_");
    CHECK(rt(FamilyId::brackets, "{}{{}}") == "{}{{}}");
    CHECK(prod(FamilyId::brackets, "{}", "{}") == "{}{{}}");
    CHECK(norm_of(FamilyId::brackets, "{}{{}}") == 4);
    CHECK_THROWS_AS(parse(FamilyId::brackets, "}{"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::brackets, "{}{"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::brackets, "{x}"), parse_error);
    try {
        parse(FamilyId::brackets, "}{");
        FAIL();
    } catch (const parse_error& e) {
        CHECK(e.error_kind() == parse_error::kind::validity);
    }
    try {
        parse(FamilyId::brackets, "{a}");
        FAIL();
    } catch (const parse_error& e) {
        CHECK(e.error_kind() == parse_error::kind::syntax);
    }
}

TEST_CASE("dyck paths") {
    CHECK(prod(FamilyId::dyck, "_", "_") == "ud");
    CHECK(prod(FamilyId::dyck, "udud", "_") == "ududud");
    CHECK(norm_of(FamilyId::dyck, "uududd") == 4);
    CHECK_THROWS_AS(parse(FamilyId::dyck, "udd"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::dyck, "uud"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::dyck, "uxd"), parse_error);
    // factorization splits at the rightmost return to the surface
    const FamilyDescriptor& f = family(FamilyId::dyck);
    auto parts = f.factorize(f.parse("uduududdud"));
    REQUIRE(parts.has_value());
    CHECK(f.render(parts->first) == "uduududd");
    CHECK(f.render(parts->second) == "_");
}

TEST_CASE("cartesian pairs") {
    CHECK(rt(FamilyId::cartesian, "(e,(e,e))") == "(e,(e,e))");
    CHECK(prod(FamilyId::cartesian, "e", "(e,e)") == "(e,(e,e))");
    CHECK(norm_of(FamilyId::cartesian, "((e,e),e)") == 3);
    CHECK_THROWS_AS(parse(FamilyId::cartesian, "(e,e"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::cartesian, "(e2,e)"), parse_error); // p = 1 here
    const FamilyDescriptor& c2 = cartesian_family<2>();
    CHECK(c2.render(c2.parse("(e2,e)")) == "(e2,e)");
    CHECK(c2.generator_count == 2);
}

TEST_CASE("complete binary trees") {
    CHECK(rt(FamilyId::cbt, "((*,*),(*,*))") == "((*,*),(*,*))");
    CHECK(prod(FamilyId::cbt, "*", "(*,*)") == "(*,(*,*))");
    CHECK(norm_of(FamilyId::cbt, "((*,*),*)") == 3);
    CHECK_THROWS_AS(parse(FamilyId::cbt, "(*)"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::cbt, "(*,*,*)"), parse_error);
}

TEST_CASE("planar trees") {
    CHECK(rt(FamilyId::planar, "(_(_))") == "(_(_))");
    CHECK(prod(FamilyId::planar, "_", "_") == "(_)");
    CHECK(prod(FamilyId::planar, "(_)", "(_)") == "(_(_))");
    CHECK(norm_of(FamilyId::planar, "(___)") == 4); // root plus three leaves
    CHECK(norm_of(FamilyId::planar, "_") == 1);
    CHECK_THROWS_AS(parse(FamilyId::planar, "()"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::planar, "(_"), parse_error);
}

TEST_CASE("nested matchings") {
    CHECK(prod(FamilyId::matching, "2:", "2:") == "4:2-3");
    CHECK(norm_of(FamilyId::matching, "4:2-3") == 2);
    CHECK(rt(FamilyId::matching, "8:2-3,4-7,5-6") == "8:2-3,4-7,5-6");
    CHECK_THROWS_AS(parse(FamilyId::matching, "4:1-2"), parse_error);     // node 1 must stay free
    CHECK_THROWS_AS(parse(FamilyId::matching, "6:2-4,3-5"), parse_error); // crossing
    CHECK_THROWS_AS(parse(FamilyId::matching, "5:2-3"), parse_error);     // odd node count
    CHECK_THROWS_AS(parse(FamilyId::matching, "6:2-3"), parse_error);     // wrong arc count
}

TEST_CASE("non-crossing chords") {
    CHECK(prod(FamilyId::chords, "0:", "0:") == "2:1-2");
    CHECK(prod(FamilyId::chords, "2:1-2", "2:1-2") == "6:1-2,3-6,4-5");
    CHECK(norm_of(FamilyId::chords, "6:1-2,3-6,4-5") == 4);
    CHECK_THROWS_AS(parse(FamilyId::chords, "4:1-3,2-4"), parse_error); // crossing
    CHECK_THROWS_AS(parse(FamilyId::chords, "4:1-2"), parse_error);     // uncovered nodes
}

TEST_CASE("non-crossing partitions") {
    CHECK(prod(FamilyId::ncpart, "0:", "0:") == "1:{1}");
    CHECK(prod(FamilyId::ncpart, "0:", "1:{1}") == "2:{1,2}");
    CHECK(prod(FamilyId::ncpart, "1:{1}", "0:") == "2:{1}{2}");
    CHECK(norm_of(FamilyId::ncpart, "3:{1,3}{2}") == 4);
    CHECK(rt(FamilyId::ncpart, "3:{2}{1,3}") == "3:{1,3}{2}"); // canonical block order
    CHECK_THROWS_AS(parse(FamilyId::ncpart, "4:{1,3}{2,4}"), parse_error); // crossing
    CHECK_THROWS_AS(parse(FamilyId::ncpart, "3:{1,2}"), parse_error);      // not a partition
}

TEST_CASE("triangulations") {
    CHECK(prod(FamilyId::triangulation, "2:", "2:") == "3:");
    CHECK(prod(FamilyId::triangulation, "3:", "3:") == "5:1-3,3-5");
    CHECK(norm_of(FamilyId::triangulation, "5:1-3,3-5") == 4);
    CHECK_THROWS_AS(parse(FamilyId::triangulation, "5:1-3"), parse_error);     // too few chords
    CHECK_THROWS_AS(parse(FamilyId::triangulation, "5:1-3,2-4"), parse_error); // crossing
    CHECK_THROWS_AS(parse(FamilyId::triangulation, "4:1-2"), parse_error);     // boundary edge
    const FamilyDescriptor& f = family(FamilyId::triangulation);
    auto parts = f.factorize(f.parse("6:1-4,2-4,4-6"));
    REQUIRE(parts.has_value());
    CHECK(f.render(parts->first) == "4:2-4");
    CHECK(f.render(parts->second) == "3:");
}

TEST_CASE("321-avoiding permutations") {
    CHECK(prod(FamilyId::avoid321, "_", "_") == "1");
    CHECK(prod(FamilyId::avoid321, "_", "1") == "2,1");
    CHECK(prod(FamilyId::avoid321, "1", "_") == "1,2");
    CHECK(prod(FamilyId::avoid321, "1", "2,1") == "1,3,4,2");
    CHECK(norm_of(FamilyId::avoid321, "1,3,4,2") == 5);
    CHECK_THROWS_AS(parse(FamilyId::avoid321, "3,2,1"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::avoid321, "1,1"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::avoid321, "1,5"), parse_error);
    // the worked cascade: an empty left factor shifts every above-diagonal dot
    CHECK(prod(FamilyId::avoid321, "_", "1,3,5,2,6,4,8,7") == "3,1,5,6,2,8,4,9,7");
}

TEST_CASE("staircase polygons") {
    CHECK(prod(FamilyId::staircase, "_", "_") == "1;");
    CHECK(prod(FamilyId::staircase, "1;", "_") == "1,1;1");
    CHECK(prod(FamilyId::staircase, "_", "1;") == "2;");
    CHECK(prod(FamilyId::staircase, "1;", "1;") == "1,2;1");
    CHECK(norm_of(FamilyId::staircase, "1,2,2,1;1,2,1") == 6); // matches its Dyck partner
    CHECK(norm_of(FamilyId::staircase, "_") == 1);
    CHECK(norm_of(FamilyId::staircase, "1;") == 2);
    CHECK_THROWS_AS(parse(FamilyId::staircase, "1,1;2"), parse_error); // overlap too large
    CHECK_THROWS_AS(parse(FamilyId::staircase, "1,0;1"), parse_error); // empty column
    CHECK_THROWS_AS(parse(FamilyId::staircase, "1,1;"), parse_error);  // missing overlap
}

TEST_CASE("standard tableaux") {
    CHECK(prod(FamilyId::tableau, "_", "_") == "1/2");
    CHECK(prod(FamilyId::tableau, "1/2", "_") == "1,3/2,4");
    CHECK(prod(FamilyId::tableau, "_", "1/2") == "1,2/3,4");
    CHECK(prod(FamilyId::tableau, "1/2", "1/2") == "1,3,4/2,5,6");
    CHECK(norm_of(FamilyId::tableau, "1,2,4/3,5,6") == 4);
    CHECK_THROWS_AS(parse(FamilyId::tableau, "1,3/2,4,5"), parse_error); // ragged rows
    CHECK_THROWS_AS(parse(FamilyId::tableau, "2,3/1,4"), parse_error);   // column decreases
    CHECK_THROWS_AS(parse(FamilyId::tableau, "1,1/2,3"), parse_error);   // repeated entry
}

TEST_CASE("floor plans") {
    CHECK(prod(FamilyId::floorplan, "_", "_") == "1,1:0-1,0-1");
    CHECK(prod(FamilyId::floorplan, "1,1:0-1,0-1", "1,1:0-1,0-1") ==
          "2,2:0-2,0-1;0-1,1-2;1-2,1-2");
    CHECK(norm_of(FamilyId::floorplan, "2,2:0-2,0-1;0-1,1-2;1-2,1-2") == 4);
    CHECK(rt(FamilyId::floorplan, "2,2:0-2,0-1;0-1,1-2;1-2,1-2") ==
          "2,2:0-2,0-1;0-1,1-2;1-2,1-2");
    CHECK_THROWS_AS(parse(FamilyId::floorplan, "2,2:0-1,0-1;1-2,1-2"), parse_error); // gap
    CHECK_THROWS_AS(parse(FamilyId::floorplan, "2,2:0-2,0-2;1-2,1-2"), parse_error); // overlap
    // split left column beside a full-height right column: forbidden junction
    CHECK_THROWS_AS(parse(FamilyId::floorplan, "2,2:0-1,0-1;0-1,1-2;1-2,0-2"), parse_error);
    // rescaled coordinates are not canonical
    CHECK_THROWS_AS(parse(FamilyId::floorplan, "2,1:0-2,0-1"), parse_error);
}

TEST_CASE("frieze sequences") {
    CHECK(prod(FamilyId::frieze, "0,0", "0,0") == "1,1,1");
    CHECK(prod(FamilyId::frieze, "0,0", "1,1,1") == "1,2,1,2");
    CHECK(prod(FamilyId::frieze, "1,1,1", "0,0") == "2,1,2,1");
    CHECK(prod(FamilyId::frieze, "1,1,1", "1,1,1") == "2,1,3,1,2");
    CHECK(norm_of(FamilyId::frieze, "1,2,2,1,3") == 4);
    CHECK_THROWS_AS(parse(FamilyId::frieze, "1,1,1,1"), parse_error);
    CHECK_THROWS_AS(parse(FamilyId::frieze, "1,1"), parse_error); // only 0,0 has length two
    CHECK_THROWS_AS(parse(FamilyId::frieze, "2,2,2"), parse_error);

    const auto rows = frieze::frieze_expand({{1, 2, 2, 1, 3}});
    REQUIRE(rows.size() == 4);
    CHECK(rows[2] == std::vector<long long>{1, 3, 1, 2, 2});
    CHECK(rows[3] == std::vector<long long>(5, 1));
    CHECK(frieze::frieze_expand({{0, 0}}).size() == 1); // generator window is vacuous
}
