#include <doctest.h>

#include <chrono>
#include <functional>
#include <set>

#include "helpers.hpp"

using namespace legmcs;

namespace {

std::string error_kind(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

MCS a_form(const Analysis& a, const Augmentation& eps) { return build_a_form(a.diagram, a.d, eps); }

}  // namespace

TEST_SUITE("mcs")
{
    TEST_CASE("unknot complexes")
    {
        auto a = testing::corpus("unknot");
        auto m = a_form(a, a.augs.at(0));
        const auto& cx = m.complexes();
        REQUIRE(cx.size() == 3);
        CHECK(cx[0].size == 0);
        CHECK(cx[1].size == 2);
        CHECK(cx[1].at(1, 2) == 1);
        CHECK(cx[1].mu[1] == cx[1].mu[2] + 1);
        CHECK(cx[2].size == 0);
    }

    TEST_CASE("handleslide between strands of different potential is rejected")
    {
        auto a = testing::corpus("trefoil");
        CHECK(error_kind([&] { derive_complexes(a.diagram, {{2, 0, 1, 3}}); }) == "HandleslideInvalid");
        CHECK(error_kind([&] { derive_complexes(a.diagram, {{0, 0, 1, 2}}); }) == "HandleslideInvalid");
        CHECK(error_kind([&] { derive_complexes(a.diagram, {{2, 0, 3, 2}}); }) == "HandleslideInvalid");
    }

    TEST_CASE("right cusp with unpaired strands breaks the axioms")
    {
        auto a = testing::corpus("trefoil");
        // Without marks the pairing after three crossings leaves 1 and 2 apart.
        try {
            derive_complexes(a.diagram, {});
            FAIL("expected an axiom violation");
        } catch (const AxiomViolation& e) {
            CHECK(e.axiom() == "4");
        }
    }

    TEST_CASE("A-form round trip")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            for (const auto& eps : a.augs) {
                auto m = a_form(a, eps);
                CHECK(augmentation_of(m, a.d) == eps);
                auto back = mcs_from_json(a.diagram, to_json(m));
                CHECK(back == m);
            }
        }
    }

    TEST_CASE("NotAForm")
    {
        auto a = testing::corpus("trefoil");
        auto m = a_form(a, testing::aug(a.d, {"a1"}));
        auto moved = apply_move(m, {1, "insert", 3, {0, 2, 3}});
        CHECK(error_kind([&] { augmentation_of(moved, a.d); }) == "NotAForm");
    }

    TEST_CASE("json errors")
    {
        auto a = testing::corpus("trefoil");
        auto other = testing::corpus("unknot");
        auto j = to_json(a_form(a, a.augs[0]));
        CHECK(error_kind([&] { mcs_from_json(other.diagram, j); }) == "MCSFrontMismatch");
        CHECK(error_kind([&] { mcs_from_json(a.diagram, nlohmann::json{{"front", j["front"]}}); }) == "MCSParseError");
        MoveTrace t{{1, "insert", 3, {0, 2, 3}}, {12, "right", 2, {1, 4}}};
        CHECK(trace_from_json(to_json(t)) == t);
    }

    TEST_CASE("move 1 inserts and cancels a pair")
    {
        auto a = testing::corpus("trefoil");
        auto m = a_form(a, testing::aug(a.d, {"a1"}));
        auto ins = apply_move(m, {1, "insert", 3, {0, 2, 3}});
        CHECK(ins.handleslides().size() == m.handleslides().size() + 2);
        CHECK(ins.complexes().front() == m.complexes().front());
        CHECK(ins.complexes().back() == m.complexes().back());
        auto back = apply_move(ins, {1, "", 3, {0}});
        CHECK(back == m);
        CHECK(error_kind([&] { apply_move(m, {1, "", 3, {0}}); }) == "PatternMismatch");
    }

    TEST_CASE("move 13 inserts and removes its collection")
    {
        bool exercised = false;
        for (const char* name : testing::kCorpus) {
            auto a = testing::corpus(name);
            for (const auto& eps : a.augs) {
                auto m = a_form(a, eps);
                for (const auto& step : legal_moves(m, a.d)) {
                    if (step.move != 13 || step.variant != "insert")
                        continue;
                    CAPTURE(describe(step));
                    auto collection = move13_collection(m, step.slot, step.args[0], step.args[1], step.args[2]);
                    auto ins = apply_move(m, step);
                    CHECK(ins.handleslides().size() == m.handleslides().size() + collection.size());
                    MoveStep undo = step;
                    undo.variant = "remove";
                    CHECK(apply_move(ins, undo) == m);
                    exercised = true;
                }
            }
        }
        CHECK(exercised);
    }

    TEST_CASE("reflected move 10 is not available")
    {
        auto a = testing::corpus("unknot");
        auto m = a_form(a, a.augs[0]);
        CHECK(error_kind([&] { apply_move(m, {10, "reflected", 1, {1, 2}}); }) == "ForbiddenMove");
    }

    TEST_CASE("interchange and passage ids")
    {
        CHECK(interchange_move_id({1, 0, 1, 2}, {1, 1, 3, 4}) == 2);
        CHECK(interchange_move_id({1, 0, 1, 2}, {1, 1, 1, 3}) == 3);
        CHECK(interchange_move_id({1, 0, 1, 2}, {1, 1, 2, 3}) == 4);
        CHECK(interchange_move_id({1, 0, 1, 3}, {1, 1, 2, 3}) == 5);
        CHECK(interchange_move_id({1, 0, 1, 4}, {1, 1, 2, 3}) == 6);
        CHECK(interchange_move_id({1, 0, 1, 2}, {1, 1, 1, 2}) == 0);
    }

    TEST_CASE("equivalence: non-homotopic augmentations have no trace")
    {
        auto a = testing::corpus("trefoil");
        auto c1 = a_form(a, testing::aug(a.d, {"a1"}));
        auto c3 = a_form(a, testing::aug(a.d, {"a3"}));
        CHECK_FALSE(are_equivalent(c1, c3, a.d).has_value());
        auto self = are_equivalent(c1, c1, a.d);
        REQUIRE(self.has_value());
        CHECK(self->empty());
    }

    TEST_CASE("equivalence: homotopic pairs give replayable traces")
    {
        auto a = testing::corpus("figure1");
        bool nonempty = false;
        for (std::size_t i = 0; i < a.augs.size(); ++i)
            for (std::size_t j = 0; j < a.augs.size(); ++j) {
                if (i == j || a.classes.classOf[i] != a.classes.classOf[j])
                    continue;
                auto c = a_form(a, a.augs[i]);
                auto cp = a_form(a, a.augs[j]);
                SweepStats stats;
                auto cert = solve_homotopy(a.augs[i], a.augs[j], a.d);
                REQUIRE(cert);
                auto trace = sweep_equivalence(c, cp, a.d, *cert, {}, &stats);
                CHECK(replay(c, trace) == cp);
                CHECK(stats.invariantViolations == 0);
                nonempty = nonempty || !trace.empty();
            }
        CHECK(nonempty);
    }

    TEST_CASE("MCS classes match homotopy classes on the corpus")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto a = testing::corpus(name);
            auto eq = mcs_classes(a, {});
            CHECK(eq.failures.empty());
            CHECK(eq.mcsClassCount == a.classes.count());
        }
    }

    TEST_CASE("rulings")
    {
        auto u = testing::corpus("unknot");
        auto r = ruling_from_mcs(a_form(u, u.augs[0]));
        CHECK(r.partner[1][1] == 2);
        CHECK(r.partner[1][2] == 1);
        CHECK(r.fingerprint() == "switches:none");

        auto t = testing::corpus("trefoil");
        std::set<std::string> prints;
        for (const auto& eps : t.augs) {
            auto rt = ruling_from_mcs(a_form(t, eps));
            CHECK_NOTHROW(validate_ruling(*t.diagram, rt));
            prints.insert(rt.fingerprint());
        }
        CHECK(prints.count("switches:2,3,4") == 1);
        CHECK(prints.count("switches:2") == 1);
        CHECK(prints.count("switches:4") == 1);
    }

    TEST_CASE("ruling is constant on MCS classes")
    {
        for (const char* name : testing::kCorpus) {
            CAPTURE(name);
            auto r = check_rulings(testing::corpus(name));
            CHECK_MESSAGE(r.passed, r.detail);
        }
    }

    TEST_CASE("broken ruling is rejected")
    {
        auto u = testing::corpus("unknot");
        auto r = ruling_from_mcs(a_form(u, u.augs[0]));
        r.partner[1][1] = 1;
        CHECK_THROWS_AS(validate_ruling(*u.diagram, r), PropertyViolation);
    }

    TEST_CASE("move fuzz")
    {
        std::vector<Analysis> corpus;
        for (const char* name : testing::kCorpus)
            corpus.push_back(testing::corpus(name));
        auto t0 = std::chrono::steady_clock::now();
        auto stats = fuzz_corpus(corpus, 10000, 7);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        CHECK(stats.applications >= 10000);
        CHECK(stats.failures == 0);
        CHECK(secs < 60);
        for (int id = 1; id <= 13; ++id) {
            CAPTURE(id);
            CHECK(stats.byMove[id] > 0);
        }
    }
}
