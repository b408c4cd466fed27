#include "catmagma/catmagma.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace catmagma;

namespace {

Term L() { return Term::leaf(1); }

// Brute-force oracle: every permutation of 1..n, filtered by a triple scan.
std::set<std::string> all_avoiding_by_brute_force(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::set<std::string> out;
    if (n == 0) {
        out.insert("_");
        return out;
    }
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int k = j + 1; k < n && ok; ++k)
                    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] &&
                        p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(k)])
                        ok = false;
        if (ok) out.insert(avoid321::render({p}));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Independent Delest-Viennot map: peak heights give the column heights,
// valley heights plus one the overlaps.
StaircasePolygon delest_viennot(const DyckPath& d) {
    StaircasePolygon s;
    int h = 0;
    for (std::size_t i = 0; i < d.word.size(); ++i) {
        const bool up = d.word[i] == 'u';
        const int next = h + (up ? 1 : -1);
        if (i + 1 < d.word.size()) {
            if (up && d.word[i + 1] == 'd') s.heights.push_back(next);
            if (!up && d.word[i + 1] == 'u') s.overlaps.push_back(next + 1);
        }
        h = next;
    }
    return s;
}

} // namespace

TEST_CASE("decompose") {
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    CHECK(decompose(dy, dy.parse("uduudd")) ==
          Term::node(Term::node(L(), L()), Term::node(L(), L())));
    for (const FamilyDescriptor& f : family_registry())
        CHECK(decompose(f, f.generator(GeneratorId{1})) == L());
    // ((o*o)*((o*o)*o))*o
    Term t = Term::node(
        Term::node(Term::node(L(), L()), Term::node(Term::node(L(), L()), L())), L());
    CHECK(decompose(dy, dy.parse("uduududdud")) == t);
    CHECK(t.norm() == dy.norm(dy.parse("uduududdud")));
}

TEST_CASE("compose") {
    const FamilyDescriptor& br = family(FamilyId::brackets);
    for (const FamilyDescriptor& f : family_registry())
        CHECK(f.equals(compose(f, L()), f.generator(GeneratorId{1})));
    CHECK(br.render(compose(br, Term::node(Term::node(L(), L()), Term::node(L(), L())))) ==
          "{}{{}}");
    const FamilyDescriptor& fz = family(FamilyId::frieze);
    Term t = Term::node(Term::node(L(), Term::node(L(), L())), Term::node(L(), L()));
    CHECK(fz.render(compose(fz, t)) == "2,2,1,4,1,2");
    // compose and decompose are mutually inverse
    for (const FamilyDescriptor& f : family_registry())
        for (long long n = 1; n <= 5; ++n)
            for (const Term& u : enumerate_terms(1, n)) CHECK(decompose(f, compose(f, u)) == u);
}

TEST_CASE("universal convert: anchors") {
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    const FamilyDescriptor& br = family(FamilyId::brackets);
    const FamilyDescriptor& tb = family(FamilyId::tableau);
    CHECK(br.render(universal_convert(dy, br, dy.parse("uduudd"))) == "{}{{}}");
    CHECK(dy.render(universal_convert(tb, dy, tb.parse("1,2,4/3,5,6"))) == "uududd");
    const FamilyDescriptor& st = family(FamilyId::staircase);
    CHECK(st.render(universal_convert(dy, st, dy.parse("uduududdud"))) == "1,2,2,1;1,2,1");
}

TEST_CASE("universal convert: identity and round trips") {
    for (const FamilyDescriptor& f : family_registry())
        for (long long n = 1; n <= 5; ++n)
            for (const Element& e : enumerate_elements(f, n))
                CHECK(f.equals(universal_convert(f, f, e), e));

    for (const FamilyDescriptor& a : family_registry())
        for (const FamilyDescriptor& b : family_registry()) {
            if (a.id == b.id) continue;
            for (long long n = 1; n <= 4; ++n)
                for (const Element& e : enumerate_elements(a, n)) {
                    const Element im = universal_convert(a, b, e);
                    CHECK(b.norm(im) == n);
                    CHECK(a.equals(universal_convert(b, a, im), e));
                }
        }
}

TEST_CASE("universal convert: morphism property") {
    std::mt19937 rng(7);
    const auto& reg = family_registry();
    for (int trial = 0; trial < 300; ++trial) {
        const FamilyDescriptor& a = reg[rng() % reg.size()];
        const FamilyDescriptor& b = reg[rng() % reg.size()];
        const long long na = 1 + static_cast<long long>(rng() % 4);
        const long long nb = 1 + static_cast<long long>(rng() % 4);
        auto ea = enumerate_elements(a, na);
        auto eb = enumerate_elements(a, nb);
        const Element& x = ea[rng() % ea.size()];
        const Element& y = eb[rng() % eb.size()];
        CHECK(b.equals(universal_convert(a, b, a.product(x, y)),
                       b.product(universal_convert(a, b, x), universal_convert(a, b, y))));
    }
}

TEST_CASE("universal convert: generator bijections") {
    const FamilyDescriptor& c2 = cartesian_family<2>();
    const std::vector<int> swap_gens{2, 1};
    const Element e = c2.parse("(e,(e2,e))");
    CHECK(c2.render(universal_convert(c2, c2, e, &swap_gens)) == "(e2,(e,e2))");
    CHECK(c2.equals(universal_convert(c2, c2, universal_convert(c2, c2, e, &swap_gens), &swap_gens), e));

    CHECK_THROWS_AS(universal_convert(c2, family(FamilyId::dyck), c2.parse("(e,e2)")),
                    contract_error);
    const std::vector<int> bad{1, 1};
    CHECK_THROWS_AS(universal_convert(c2, c2, e, &bad), contract_error);

    // p = 2 enumeration goes through the descriptor as well
    CHECK(BigInt(enumerate_elements(c2, 4).size()) == p_catalan_number(2, 4));
}

TEST_CASE("enumerate elements") {
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    auto e4 = enumerate_elements(dy, 4);
    std::vector<std::string> texts;
    for (const Element& e : e4) texts.push_back(dy.render(e));
    CHECK(std::is_sorted(texts.begin(), texts.end()));
    auto again = enumerate_elements(dy, 4);
    for (std::size_t i = 0; i < e4.size(); ++i) CHECK(dy.equals(e4[i], again[i]));
    CHECK_THROWS_AS(enumerate_elements(dy, 13), contract_error);
    CHECK(enumerate_elements(dy, 9, 9).size() == 1430);
}

TEST_CASE("narayana histograms") {
    for (const FamilyDescriptor& f : family_registry()) {
        NarayanaHistogram h = narayana_histogram(f, 4);
        CHECK(h.counts == std::map<long long, long long>{{1, 1}, {2, 3}, {3, 1}});
    }
    NarayanaHistogram b6 = narayana_histogram(family(FamilyId::brackets), 6);
    CHECK(b6.counts ==
          std::map<long long, long long>{{1, 1}, {2, 10}, {3, 20}, {4, 10}, {5, 1}});
    for (long long n = 2; n <= 7; ++n) {
        NarayanaHistogram h = narayana_histogram(family(FamilyId::dyck), n);
        long long total = 0;
        for (auto [k, c] : h.counts) {
            CHECK(BigInt(c) == narayana_value(n, k));
            CHECK(h.counts.at(n - k) == c);
            total += c;
        }
        CHECK(BigInt(total) == catalan_number(n - 1));
    }
}

TEST_CASE("321-avoiding enumeration matches brute force") {
    const FamilyDescriptor& av = family(FamilyId::avoid321);
    for (long long n = 1; n <= 7; ++n) {
        std::set<std::string> got;
        for (const Element& e : enumerate_elements(av, n)) got.insert(av.render(e));
        CHECK(got == all_avoiding_by_brute_force(static_cast<int>(n) - 1));
    }
}

TEST_CASE("frieze brute force over short sequences") {
    const FamilyDescriptor& fz = family(FamilyId::frieze);
    // every enumerated sequence passes expansion
    for (long long n = 2; n <= 7; ++n)
        for (const Element& e : enumerate_elements(fz, n))
            CHECK(frieze::is_valid(native<FriezeSequence>(e)));
    // exhaustive search over length-5 sequences with entries <= 4
    std::set<std::string> valid;
    std::vector<long long> seq(5);
    for (seq[0] = 0; seq[0] <= 4; ++seq[0])
        for (seq[1] = 0; seq[1] <= 4; ++seq[1])
            for (seq[2] = 0; seq[2] <= 4; ++seq[2])
                for (seq[3] = 0; seq[3] <= 4; ++seq[3])
                    for (seq[4] = 0; seq[4] <= 4; ++seq[4])
                        if (frieze::is_valid({seq})) valid.insert(frieze::render({seq}));
    CHECK(valid == std::set<std::string>{"1,2,2,1,3", "2,2,1,3,1", "2,1,3,1,2", "1,3,1,2,2",
                                         "3,1,2,2,1"});
}

TEST_CASE("frieze factorization split-search oracle") {
    const FamilyDescriptor& fz = family(FamilyId::frieze);
    for (long long n = 1; n <= 7; ++n)
        for (const Element& e : enumerate_elements(fz, n)) {
            const auto& seq = native<FriezeSequence>(e);
            auto primary = frieze::factorize(seq);
            auto splits = frieze::factorize_by_split_search(seq);
            if (n == 1) {
                CHECK_FALSE(primary.has_value());
                CHECK(splits.empty());
            } else {
                REQUIRE(primary.has_value());
                REQUIRE(splits.size() == 1);
                CHECK(splits[0].first == primary->first);
                CHECK(splits[0].second == primary->second);
            }
        }
}

TEST_CASE("delest-viennot map agrees with the universal bijection") {
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    const FamilyDescriptor& st = family(FamilyId::staircase);
    for (long long n = 1; n <= 6; ++n)
        for (const Element& e : enumerate_elements(dy, n)) {
            const Element im = universal_convert(dy, st, e);
            CHECK(native<StaircasePolygon>(im) == delest_viennot(native<DyckPath>(e)));
        }
}

TEST_CASE("direct special-case bijections agree with the universal one") {
    const FamilyDescriptor& tb = family(FamilyId::tableau);
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    for (long long n = 1; n <= 6; ++n)
        for (const Element& e : enumerate_elements(tb, n))
            CHECK(native<DyckPath>(universal_convert(tb, dy, e)) ==
                  tableau::to_dyck(native<StandardTableau>(e)));
    CHECK(tableau::to_dyck(native<StandardTableau>(tb.parse("1,2,4/3,5,6"))).word == "uududd");
    CHECK(tableau::to_dyck(native<StandardTableau>(tb.parse("1/2"))).word == "ud");
    CHECK(tableau::to_dyck(native<StandardTableau>(tb.parse("1,3,5/2,4,6"))).word == "ududud");

    const FamilyDescriptor& tr = family(FamilyId::triangulation);
    const FamilyDescriptor& fz = family(FamilyId::frieze);
    for (long long n = 1; n <= 6; ++n)
        for (const Element& e : enumerate_elements(tr, n))
            CHECK(native<FriezeSequence>(universal_convert(tr, fz, e)) ==
                  triangulation::to_frieze(native<Triangulation>(e)));
    // the worked hexagon: three chords at one vertex
    CHECK(triangulation::to_frieze(native<Triangulation>(tr.parse("6:1-4,2-4,4-6"))) ==
          FriezeSequence{{2, 2, 1, 4, 1, 2}});
    CHECK(triangulation::to_frieze(triangulation::generator()) == FriezeSequence{{0, 0}});
    // pentagon fans give the five norm-4 sequences
    std::set<std::string> fans;
    for (const Element& e : enumerate_elements(tr, 4))
        fans.insert(fz.render(Element(triangulation::to_frieze(native<Triangulation>(e)))));
    CHECK(fans == std::set<std::string>{"1,2,2,1,3", "2,2,1,3,1", "2,1,3,1,2", "1,3,1,2,2",
                                        "3,1,2,2,1"});
}

TEST_CASE("arc and chord families stay non-crossing under enumeration") {
    for (long long n = 1; n <= 6; ++n) {
        for (const Element& e : enumerate_elements(family(FamilyId::chords), n)) {
            const auto& cc = native<ChordCircle>(e);
            for (auto [a, b] : cc.chords)
                for (auto [c, d] : cc.chords) CHECK_FALSE((a < c && c < b && b < d));
        }
        for (const Element& e : enumerate_elements(family(FamilyId::matching), n)) {
            const auto& m = native<NestedMatching>(e);
            for (auto [a, b] : m.arcs)
                for (auto [c, d] : m.arcs) CHECK_FALSE((a < c && c < b && b < d));
        }
    }
}

TEST_CASE("floor plans: canonical forms distinct and junction-legal") {
    const FamilyDescriptor& fp = family(FamilyId::floorplan);
    for (long long n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const Element& e : enumerate_elements(fp, n)) {
            const auto& plan = native<FloorPlan>(e);
            CHECK(static_cast<long long>(plan.rooms.size()) == n - 1);
            CHECK(floorplan::canonicalize(plan.rooms) == plan);
            CHECK(floorplan::is_member(plan));
            seen.insert(fp.render(e));
        }
        CHECK(BigInt(seen.size()) == catalan_number(n - 1));
    }
}

TEST_CASE("opposite product") {
    const FamilyDescriptor& dy = family(FamilyId::dyck);
    CHECK(dy.render(opposite_product(dy, dy.parse("_"), dy.parse("udud"))) == "ududud");
    CHECK(dy.render(opposite_product(dy, dy.parse("ud"), dy.parse("udud"))) == "ududuudd");
    // opposite of opposite is the product again
    for (long long na = 1; na <= 3; ++na)
        for (long long nb = 1; na + nb <= 4; ++nb)
            for (const Element& a : enumerate_elements(dy, na))
                for (const Element& b : enumerate_elements(dy, nb))
                    CHECK(dy.equals(opposite_product(dy, b, a), dy.product(a, b)));
}
