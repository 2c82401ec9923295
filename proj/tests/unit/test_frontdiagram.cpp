#include <doctest.h>

#include "helpers.hpp"
#include "legmcs/errors.hpp"

using namespace legmcs;

TEST_SUITE("frontdiagram")
{
    TEST_CASE("parse maps tokens to events")
    {
        auto ev = parse_front_word("L1 R1");
        REQUIRE(ev.size() == 2);
        CHECK(ev[0] == FrontEvent{EventKind::LeftCusp, 1});
        CHECK(ev[1] == FrontEvent{EventKind::RightCusp, 1});

        auto tref = parse_front_word("L1 L3 X2 X2 X2 R1 R1");
        CHECK(tref.size() == 7);
        CHECK(format_front_word(tref) == "L1 L3 X2 X2 X2 R1 R1");
    }

    TEST_CASE("parse skips comments and whitespace")
    {
        auto ev = parse_front_word("# header\nL1   # left\n\tR1\n");
        CHECK(format_front_word(ev) == "L1 R1");
    }

    TEST_CASE("parse errors carry the token index")
    {
        CHECK_THROWS_AS(parse_front_word("L0 R1"), ParseError);
        try {
            parse_front_word("L1 Q2 R1");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.tokenIndex() == 1);
            CHECK(e.family() == ErrorFamily::InvalidInput);
        }
        CHECK_THROWS_AS(parse_front_word("L1 X"), ParseError);
        CHECK_THROWS_AS(parse_front_word("  # nothing\n"), ParseError);
    }

    TEST_CASE("strand counts")
    {
        auto u = build_diagram(parse_front_word("L1 R1"));
        CHECK(u.strand_counts() == std::vector<int>{0, 2, 0});
        CHECK(u.knot_cycle().size() == 2);

        auto t = build_diagram(parse_front_word("L1 L3 X2 X2 X2 R1 R1"));
        CHECK(t.strand_counts() == std::vector<int>{0, 2, 4, 4, 4, 4, 2, 0});
    }

    TEST_CASE("illegal fronts")
    {
        CHECK_THROWS_AS(build_diagram(parse_front_word("L1 R1 L1 R1")), DiagramError);
        CHECK_THROWS_AS(build_diagram(parse_front_word("L1 X2 R1")), DiagramError);
        CHECK_THROWS_AS(build_diagram(parse_front_word("L1 L4 R1 R1")), DiagramError);
        CHECK_THROWS_AS(build_diagram(parse_front_word("L1 L1 R1")), DiagramError);
    }

    TEST_CASE("Maslov potential")
    {
        auto u = load_front("L1 R1");
        auto [top, bottom] = u.cusp_arcs(0);
        CHECK(u.maslov_of_arc(top) == u.maslov_of_arc(bottom) + 1);
        CHECK(u.maslov_of_arc(top) == 1);
        CHECK(u.rotation() == 0);

        auto t = load_front("L1 L3 X2 X2 X2 R1 R1");
        for (int e = 2; e <= 4; ++e) {
            auto [a, b] = t.crossing_arcs(e);
            CHECK(t.maslov_of_arc(a) == t.maslov_of_arc(b));
        }
        CHECK(t.rotation() == 0);
    }

    TEST_CASE("stabilized unknot has no integer Maslov potential")
    {
        CHECK_THROWS_AS(load_front("L1 X1 R1"), MaslovInconsistent);
        try {
            load_front("L1 X1 R1");
        } catch (const MaslovInconsistent& e) {
            CHECK(e.rotation() != 0);
        }
    }

    TEST_CASE("generator degrees")
    {
        auto gens = grade_generators(load_front("L1 R1"));
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].kind == GeneratorKind::RightCusp);
        CHECK(gens[0].degree == 1);

        std::vector<int> deg;
        for (const auto& g : grade_generators(load_front("L1 L3 X2 X2 X2 R1 R1")))
            deg.push_back(g.degree);
        CHECK(deg == std::vector<int>{0, 0, 0, 1, 1});

        deg.clear();
        for (const auto& g : grade_generators(load_front("L1 X1 X1 R1")))
            deg.push_back(g.degree);
        CHECK(deg == std::vector<int>{1, -1, 1});
    }

    TEST_CASE("cusp balance on the corpus")
    {
        for (const char* name : testing::kCorpus) {
            auto d = load_front(testing::corpus_file(name));
            int running = 0;
            for (const auto& ev : d.events()) {
                running += ev.kind == EventKind::LeftCusp ? 2 : ev.kind == EventKind::RightCusp ? -2 : 0;
                CHECK(running >= 0);
            }
            CHECK(running == 0);
        }
    }
}
