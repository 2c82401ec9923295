#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace legmcs;

TEST_SUITE("dga")
{
    TEST_CASE("unknot: db = 0")
    {
        auto d = differential(load_front("L1 R1"));
        REQUIRE(d.generators.size() == 1);
        CHECK(d.terms[0].empty());
        CHECK(check_d_squared(d));
    }

    TEST_CASE("trefoil differential")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        int b1 = testing::generator_id(d, "b1");
        REQUIRE(b1 >= 0);
        WordSet expected{Word{}, testing::word(d, {"a1"}), testing::word(d, {"a3"}),
                         testing::word(d, {"a1", "a2", "a3"})};
        CHECK(d.terms[b1] == expected);
        for (const char* a : {"a1", "a2", "a3"})
            CHECK(d.terms[testing::generator_id(d, a)].empty());
        CHECK(check_d_squared(d));
        CHECK(degree_homogeneous(d));
    }

    TEST_CASE("a mutated differential fails d^2 = 0")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        int b1 = testing::generator_id(d, "b1");
        int b2 = testing::generator_id(d, "b2");
        // b2 now hits b1, and d b1 contains the unit.
        toggle(d.terms[b2], Word{b1});
        CHECK_FALSE(check_d_squared(d));
        CHECK_FALSE(oracle::d_squared_zero(d));
    }

    TEST_CASE("stabilized unknot degrees")
    {
        auto d = differential(load_front("L1 X1 X1 R1"));
        std::vector<int> deg;
        for (const auto& g : d.generators)
            deg.push_back(g.degree);
        CHECK(deg == std::vector<int>{1, -1, 1});
        CHECK(check_d_squared(d));
    }

    TEST_CASE("Leibniz rule on products")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        int b1 = testing::generator_id(d, "b1");
        WordSet bb{Word{b1, b1}};
        // d(b1 b1) = d(b1) b1 + b1 d(b1)
        WordSet expected = multiply(d.terms[b1], WordSet{Word{b1}});
        toggle_all(expected, multiply(WordSet{Word{b1}}, d.terms[b1]));
        CHECK(apply_differential(d, bb) == expected);
    }

    TEST_CASE("corpus: d^2 = 0, grading, oracle agreement, front disk count")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto diagram = load_front(testing::corpus_file(name));
            auto d = differential(diagram);
            CHECK(check_d_squared(d));
            CHECK(oracle::d_squared_zero(d));
            CHECK(degree_homogeneous(d));
            auto fd = front_differential(diagram);
            CHECK(fd.terms == d.terms);
        }
    }

    TEST_CASE("json output")
    {
        auto d = differential(load_front("L1 R1"));
        auto j = to_json(d);
        CHECK(j["front"] == "L1 R1");
        CHECK(j["d"]["0"].empty());
        CHECK(j["generators"][0]["degree"] == 1);
        CHECK(word_to_string(d, Word{}) == "1");
    }
}
