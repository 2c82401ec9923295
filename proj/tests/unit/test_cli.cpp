#include <doctest.h>

#include "helpers.hpp"
#include "legmcs/render.hpp"

using namespace legmcs;

TEST_SUITE("cli")
{
    TEST_CASE("render is deterministic")
    {
        auto a = testing::corpus("figure1");
        auto m = build_a_form(a.diagram, a.d, a.augs.back());
        auto s1 = render_svg(*a.diagram, &m);
        auto s2 = render_svg(*a.diagram, &m);
        CHECK(s1 == s2);
        CHECK(s1.rfind("<svg", 0) == 0);
        CHECK(s1.find("</svg>") != std::string::npos);
        CHECK(render_svg(*a.diagram) != s1);
    }

    TEST_CASE("fnv1a")
    {
        CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
        CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    }

    TEST_CASE("knot type tag")
    {
        CHECK(knot_type_tag("# knot: trefoil\nL1 R1") == "trefoil");
        CHECK(knot_type_tag("L1 R1") == "");
        CHECK(testing::corpus("trefoil-alt").knotType == "trefoil");
    }

    TEST_CASE("invariant report counts")
    {
        struct Expect {
            const char* name;
            int count;
        };
        for (auto [name, count] : {Expect{"unknot", 1}, Expect{"trefoil", 5}}) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            auto eq = mcs_classes(a, {});
            auto j = invariant_report(a, eq, {});
            CHECK(j["augmentations"] == count);
            CHECK(j["homotopy_classes"] == count);
            CHECK(j["mcs_classes"] == count);
            CHECK(j["rotation"] == 0);
        }
    }

    TEST_CASE("corpus load")
    {
        auto corpus = load_corpus(LEGMCS_CORPUS_DIR);
        CHECK(corpus.size() == std::size(testing::kCorpus));
        for (std::size_t i = 1; i < corpus.size(); ++i)
            CHECK(corpus[i - 1].name + ".front" < corpus[i].name + ".front");
    }
}
