#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace legmcs;

namespace {

std::vector<std::vector<std::uint8_t>> values_of(const std::vector<Augmentation>& augs)
{
    std::vector<std::vector<std::uint8_t>> out;
    for (const auto& a : augs)
        out.push_back(a.values);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("augment")
{
    TEST_CASE("augmentation counts")
    {
        CHECK(enumerate_augmentations(differential(load_front("L1 R1"))).size() == 1);
        CHECK(enumerate_augmentations(differential(load_front("L1 L3 X2 X2 X2 R1 R1"))).size() == 5);
        CHECK(enumerate_augmentations(differential(load_front("L1 X1 X1 R1"))).empty());
    }

    TEST_CASE("trefoil augmentations by support")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        CHECK(is_augmentation(d, testing::aug(d, {"a1"})));
        CHECK(is_augmentation(d, testing::aug(d, {"a3"})));
        CHECK(is_augmentation(d, testing::aug(d, {"a1", "a2", "a3"})));
        Augmentation zero{std::vector<std::uint8_t>(d.generators.size(), 0)};
        CHECK_FALSE(is_augmentation(d, zero));
        Augmentation both = zero;
        both.values[testing::generator_id(d, "a1")] = 1;
        both.values[testing::generator_id(d, "a3")] = 1;
        CHECK_FALSE(is_augmentation(d, both));
        CHECK_THROWS_AS(testing::aug(d, {"a1", "a3"}), InvalidArgument);
    }

    TEST_CASE("enumeration agrees with the oracle")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto d = differential(load_front(testing::corpus_file(name)));
            auto mine = values_of(enumerate_augmentations(d));
            auto theirs = oracle::augmentations(d);
            std::sort(theirs.begin(), theirs.end());
            CHECK(mine == theirs);
        }
    }

    TEST_CASE("enumeration cap")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        CHECK_THROWS_AS(enumerate_augmentations(d, 2), BudgetExceeded);
    }

    TEST_CASE("trefoil has 5 homotopy classes")
    {
        auto d = differential(load_front("L1 L3 X2 X2 X2 R1 R1"));
        auto augs = enumerate_augmentations(d);
        auto classes = homotopy_classes(augs, d);
        CHECK(classes.count() == 5);
        // no degree -1 crossings: h = 0 is the only candidate
        CHECK_FALSE(solve_homotopy(augs[0], augs[1], d).has_value());
        CHECK(solve_homotopy(augs[0], augs[0], d).has_value());
    }

    TEST_CASE("homotopy solver agrees with the oracle")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto d = differential(load_front(testing::corpus_file(name)));
            auto augs = enumerate_augmentations(d);
            for (const auto& a : augs)
                for (const auto& b : augs) {
                    auto cert = solve_homotopy(a, b, d);
                    auto brute = oracle::homotopy(d, a.values, b.values);
                    CHECK(cert.has_value() == brute.has_value());
                    if (cert)
                        CHECK(verify_certificate(d, a, b, *cert));
                }
        }
    }

    TEST_CASE("class partition is an equivalence")
    {
        auto a = testing::corpus("figure1");
        CHECK(a.augs.size() == 20);
        CHECK(a.classes.count() == 5);
        for (std::size_t i = 0; i < a.augs.size(); ++i)
            for (std::size_t j = 0; j < a.augs.size(); ++j) {
                bool same = a.classes.classOf[i] == a.classes.classOf[j];
                CHECK(same == solve_homotopy(a.augs[i], a.augs[j], a.d).has_value());
            }
    }

    TEST_CASE("certificate check rejects a wrong h")
    {
        auto a = testing::corpus("figure1");
        for (const auto& [pair, cert] : a.classes.certificates) {
            if (pair.first == pair.second || cert.support().empty())
                continue;
            HomotopyCertificate zero{std::vector<std::uint8_t>(cert.h.size(), 0)};
            CHECK_FALSE(verify_certificate(a.d, a.augs[pair.first], a.augs[pair.second], zero));
            return;
        }
        FAIL("no certificate with nonzero support");
    }
}
