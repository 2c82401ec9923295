// Acceptance driver: one PASS/FAIL line per criterion over the shipped corpus.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "legmcs/verify.hpp"

using namespace legmcs;

namespace {

struct Line {
    bool passed = true;
    double seconds = 0;
    std::string detail;

    void fail(const std::string& what)
    {
        if (passed)
            detail = what;
        passed = false;
    }
    void add(const CheckResult& r, const std::string& who)
    {
        seconds += r.seconds;
        if (!r.passed)
            fail(who + ": " + r.detail);
    }
};

double timed(const std::function<void()>& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int crossing_count(const FrontDiagram& d)
{
    int n = 0;
    for (const auto& ev : d.events())
        n += ev.kind == EventKind::Crossing;
    return n;
}

std::string format_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// The golden file stores per-augmentation Poincare polynomials by support.
void check_golden(const Analysis& a, Line& line)
{
    std::ifstream in(std::string(LEGMCS_GOLDEN_DIR) + "/trefoil_lch.json");
    if (!in) {
        line.fail("golden file missing");
        return;
    }
    auto golden = nlohmann::json::parse(in);
    if (golden["front"] != a.diagram->word()) {
        line.fail("golden front differs from the corpus trefoil");
        return;
    }
    std::map<std::string, nlohmann::json> expected;
    for (const auto& e : golden["augmentations"])
        expected[e["augmentation"]] = e["poincare"];
    if (expected.size() != a.augs.size())
        line.fail("golden file has " + std::to_string(expected.size()) + " augmentations");
    for (const auto& eps : a.augs) {
        std::string key = "{";
        for (int g : eps.support())
            key += (key.size() > 1 ? "," : "") + generator_name(a.d, g);
        key += "}";
        auto p = homology_poincare(linearize(a.d, eps));
        auto it = expected.find(key);
        if (it == expected.end() || it->second != to_json(p))
            line.fail("trefoil " + key + " gives " + format_poincare(p));
        auto dim = [&](int k) { return p.count(k) ? p.at(k) : 0; };
        if (dim(0) - dim(1) != 1)
            line.fail("trefoil " + key + ": dim H0 - dim H1 != 1");
    }
}

}  // namespace

int main()
{
    std::vector<Analysis> corpus;
    double loadSeconds = timed([&] { corpus = load_corpus(LEGMCS_CORPUS_DIR); });

    std::map<int, Line> lines;
    const char* names[] = {"",
                           "DGA soundness",
                           "cross-engine disk agreement",
                           "homotopy classes = MCS classes",
                           "A-form complexes = half-disk counts",
                           "mark difference = admissible disk parity",
                           "sweep invariant",
                           "homotopy relation audit",
                           "linearized homology constant on classes",
                           "ruling constant on classes",
                           "move fuzz",
                           "count equality across fronts"};

    if (corpus.empty()) {
        std::printf("FAIL  corpus: nothing loaded from %s\n", LEGMCS_CORPUS_DIR);
        return 1;
    }
    lines[1].seconds += loadSeconds;

    SweepOptions opts;
    opts.checkInvariant = true;
    opts.checkReplay = true;
    const std::map<std::string, int> expectedClasses = {{"trefoil", 5}, {"unknot", 1}, {"dstab-unknot", 0}};

    std::vector<EquivalenceResult> eqs;
    for (const auto& a : corpus) {
        if (crossing_count(*a.diagram) > 12)
            lines[1].fail(a.name + " has more than 12 crossings");
        EquivalenceResult eq;
        double eqSeconds = timed([&] { eq = mcs_classes(a, opts); });
        eqs.push_back(eq);

        lines[1].add(check_dga(a, true), a.name);
        lines[2].add(check_disk_agreement(a), a.name);
        lines[3].add(check_class_counts(a, eq, true), a.name);
        lines[3].seconds += eqSeconds;
        auto want = expectedClasses.find(a.name);
        if (want != expectedClasses.end() &&
            (a.classes.count() != want->second || eq.mcsClassCount != want->second))
            lines[3].fail(a.name + ": " + std::to_string(a.classes.count()) + " homotopy classes, " +
                          std::to_string(eq.mcsClassCount) + " MCS classes, expected " +
                          std::to_string(want->second));
        lines[4].add(check_aform_tables(a), a.name);
        lines[5].add(check_mark_parity(a), a.name);
        lines[6].add(check_sweep_invariant(a, eq), a.name);
        lines[7].add(check_homotopy_audit(a, true), a.name);
        lines[8].add(check_linhom(a), a.name);
        if (a.name == "trefoil")
            check_golden(a, lines[8]);
        lines[9].add(check_rulings(a), a.name);
    }
    for (const auto& [name, count] : expectedClasses) {
        bool seen = false;
        for (const auto& a : corpus)
            seen = seen || a.name == name;
        if (!seen)
            lines[3].fail(name + " missing from the corpus");
    }

    lines[10].add(check_fuzz(corpus, 10000, 1), "corpus");
    lines[11].add(check_count_pairs(corpus, eqs), "corpus");

    if (lines[1].seconds >= 10)
        lines[1].fail("took " + format_seconds(lines[1].seconds) + ", limit 10s");
    if (lines[2].seconds >= 30)
        lines[2].fail("took " + format_seconds(lines[2].seconds) + ", limit 30s");
    if (lines[10].seconds >= 60)
        lines[10].fail("took " + format_seconds(lines[10].seconds) + ", limit 60s");

    int failed = 0;
    for (int c = 1; c <= 11; ++c) {
        const Line& l = lines[c];
        std::printf("%s  criterion %2d  %-42s %8s", l.passed ? "PASS" : "FAIL", c, names[c],
                    format_seconds(l.seconds).c_str());
        if (!l.passed)
            std::printf("  %s", l.detail.c_str());
        std::printf("\n");
        failed += !l.passed;
    }
    std::printf("%d of 11 criteria passed on %zu diagrams\n", 11 - failed, corpus.size());
    return failed ? 1 : 0;
}
