#include <doctest.h>

#include "helpers.hpp"

using namespace legmcs;

TEST_SUITE("disks")
{
    TEST_CASE("unknot eps-half disk tables")
    {
        auto diagram = load_front("L1 R1");
        auto d = differential(diagram);
        auto eps = enumerate_augmentations(d).at(0);
        auto tables = eps_half_disk_tables(diagram, eps);
        REQUIRE(tables.size() == 3);
        CHECK(tables[1][1][2] == 1);
        CHECK(count_eps_half_disks(diagram, eps, 1, 1, 2) == 1);

        DiskQuery q;
        q.kind = DiskClass::EpsHalf;
        q.slot = 1;
        q.i = 1;
        q.j = 2;
        q.eps = &eps;
        auto disks = enumerate_front_disks(diagram, q);
        REQUIRE(disks.size() == 1);
        CHECK(disks[0].word.empty());
        CHECK(disks[0].segments.front().slot == 1);
    }

    TEST_CASE("eps-half counts: recurrence agrees with enumeration")
    {
        for (const char* name : {"trefoil", "figure1", "nested"}) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            const auto& diagram = *a.diagram;
            for (const auto& eps : a.augs) {
                auto tables = eps_half_disk_tables(diagram, eps);
                for (int p = 0; p < diagram.slot_count(); ++p)
                    for (int i = 1; i <= diagram.strands(p); ++i)
                        for (int j = i + 1; j <= diagram.strands(p); ++j) {
                            DiskQuery q;
                            q.kind = DiskClass::EpsHalf;
                            q.slot = p;
                            q.i = i;
                            q.j = j;
                            q.eps = &eps;
                            auto n = enumerate_front_disks(diagram, q).size() % 2;
                            CHECK(tables[p][i][j] == n);
                        }
            }
        }
    }

    TEST_CASE("eps-half tables match the A-form complexes")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            CHECK(check_aform_tables(a).passed);
        }
    }

    TEST_CASE("admissible disk parity at degree-0 crossings")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            auto r = check_mark_parity(a);
            CHECK_MESSAGE(r.passed, r.detail);
        }
        auto a = testing::corpus("figure1");
        for (const auto& [pair, cert] : a.classes.certificates)
            for (const auto& g : a.d.generators)
                if (g.kind == GeneratorKind::Crossing && g.degree == 0)
                    CHECK(check_prop21(*a.diagram, a.augs[pair.first], a.augs[pair.second], cert, g.id));
    }

    TEST_CASE("resolution and front disks agree")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto r = check_disk_agreement(testing::corpus(name));
            CHECK_MESSAGE(r.passed, r.detail);
        }
    }

    TEST_CASE("disk json")
    {
        auto diagram = load_front("L1 L3 X2 X2 X2 R1 R1");
        auto d = differential(diagram);
        auto eps = testing::aug(d, {"a1"});
        DiskQuery q;
        q.kind = DiskClass::EpsHalf;
        q.slot = 2;
        q.i = 1;
        q.j = 2;
        q.eps = &eps;
        for (const auto& disk : enumerate_front_disks(diagram, q)) {
            auto j = to_json(disk);
            CHECK(j.contains("segments"));
        }
    }
}
