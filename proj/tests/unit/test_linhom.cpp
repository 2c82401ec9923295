#include <doctest.h>

#include <fstream>

#include "helpers.hpp"

using namespace legmcs;

TEST_SUITE("linhom")
{
    TEST_CASE("unknot")
    {
        auto d = differential(load_front("L1 R1"));
        auto lc = linearize(d, enumerate_augmentations(d).at(0));
        CHECK(is_differential(lc));
        auto p = homology_poincare(lc);
        CHECK(p == PoincarePolynomial{{1, 1}});
        CHECK(format_poincare(p) == "t");
        CHECK(euler_characteristic(p) == -1);
    }

    TEST_CASE("trefoil linear part of d b1 under {a1}")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        auto lc = linearize(d, testing::aug(d, {"a1"}));
        int b1 = testing::generator_id(d, "b1");
        std::vector<int> hits;
        for (int p = 0; p < lc.matrix.rows(); ++p)
            if (lc.matrix.at(p, b1))
                hits.push_back(p);
        CHECK(hits == std::vector<int>{testing::generator_id(d, "a1"), testing::generator_id(d, "a3")});
        CHECK(is_differential(lc));
        CHECK(degree_homogeneous(lc));
    }

    TEST_CASE("trefoil matches the golden file")
    {
        std::ifstream in(std::string(LEGMCS_GOLDEN_DIR) + "/trefoil_lch.json");
        REQUIRE(in);
        auto golden = nlohmann::json::parse(in);
        auto d = differential(load_front(golden["front"].get<std::string>()));
        auto augs = enumerate_augmentations(d);
        REQUIRE(augs.size() == golden["augmentations"].size());
        for (const auto& entry : golden["augmentations"]) {
            std::string spec = entry["augmentation"];
            Augmentation eps;
            bool found = false;
            for (const auto& a : augs) {
                std::string s = "{";
                for (int g : a.support())
                    s += (s.size() > 1 ? "," : "") + generator_name(d, g);
                s += "}";
                if (s == spec) {
                    eps = a;
                    found = true;
                }
            }
            REQUIRE_MESSAGE(found, spec);
            auto p = homology_poincare(linearize(d, eps));
            CHECK(to_json(p) == entry["poincare"]);
            CHECK(format_poincare(p) == entry["poincare_string"].get<std::string>());
        }
    }

    TEST_CASE("Euler characteristic equals the graded generator count")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            int chi = 0;
            for (const auto& g : a.d.generators)
                chi += g.degree % 2 == 0 ? 1 : -1;
            for (const auto& eps : a.augs) {
                auto lc = linearize(a.d, eps);
                CHECK(is_differential(lc));
                CHECK(euler_characteristic(homology_poincare(lc)) == chi);
            }
        }
    }

    TEST_CASE("formatting")
    {
        CHECK(format_poincare({}) == "0");
        CHECK(format_poincare({{0, 2}, {1, 1}}) == "t + 2");
        CHECK(format_poincare({{-1, 1}, {2, 3}}) == "3t^2 + t^(-1)");
    }
}
