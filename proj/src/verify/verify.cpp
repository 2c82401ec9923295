#include "legmcs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "legmcs/disks.hpp"
#include "legmcs/errors.hpp"
#include "oracles.hpp"

namespace legmcs {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

CheckResult start(int criterion, std::string name) { return {criterion, std::move(name), true, "", 0}; }

void fail(CheckResult& r, const std::string& detail)
{
    if (r.passed)
        r.detail = detail;
    r.passed = false;
}

// Runs body, turning property violations into a failed result.
template <class F>
CheckResult run_check(int criterion, std::string name, F&& body)
{
    Timer t;
    CheckResult r = start(criterion, std::move(name));
    try {
        body(r);
    } catch (const PropertyViolation& e) {
        fail(r, e.what());
    } catch (const InputError& e) {
        fail(r, e.what());
    }
    r.seconds = t.seconds();
    return r;
}

std::string support_name(const Differential& d, const Augmentation& eps)
{
    std::string out = "{";
    bool first = true;
    for (int g : eps.support()) {
        out += (first ? "" : ",") + generator_name(d, g);
        first = false;
    }
    return out + "}";
}

oracle::Values values(const Augmentation& a) { return a.values; }

int find(std::vector<int>& parent, int x)
{
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string knot_type_tag(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    const std::string key = "# knot:";
    while (std::getline(in, line))
        if (line.rfind(key, 0) == 0) {
            auto v = line.substr(key.size());
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t\r") + 1);
            return v;
        }
    return "";
}

Analysis analyze(std::string name, std::string_view text)
{
    Analysis a;
    a.name = std::move(name);
    a.knotType = knot_type_tag(text);
    a.diagram = std::make_shared<const FrontDiagram>(load_front(text));
    a.d = differential(*a.diagram);
    a.augs = enumerate_augmentations(a.d);
    a.classes = homotopy_classes(a.augs, a.d);
    return a;
}

std::vector<Analysis> load_corpus(const std::string& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".front")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Analysis> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream buf;
        buf << in.rdbuf();
        out.push_back(analyze(f.stem().string(), buf.str()));
    }
    return out;
}

EquivalenceResult mcs_classes(const Analysis& a, const SweepOptions& options)
{
    EquivalenceResult r;
    const int n = static_cast<int>(a.augs.size());
    std::vector<MCS> forms;
    for (const auto& eps : a.augs)
        forms.push_back(build_a_form(a.diagram, a.d, eps));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            ++r.pairsTried;
            auto cert = solve_homotopy(a.augs[i], a.augs[j], a.d);
            if (!cert)
                continue;
            try {
                SweepStats stats;
                auto trace = sweep_equivalence(forms[i], forms[j], a.d, *cert, options, &stats);
                ++r.traces;
                r.totalSteps += trace.size();
                r.totals.invariantChecks += stats.invariantChecks;
                r.totals.invariantViolations += stats.invariantViolations;
                r.totals.markFlips += stats.markFlips;
                if (replay(forms[i], trace) == forms[j])
                    ++r.replayed;
                else
                    r.failures.push_back("replay " + std::to_string(i) + "->" + std::to_string(j) + " misses the target");
                parent[find(parent, i)] = find(parent, j);
            } catch (const PropertyViolation& e) {
                r.totals.invariantViolations += e.kind() == "SweepInvariantViolation";
                r.failures.push_back("sweep " + std::to_string(i) + "->" + std::to_string(j) + ": " + e.what());
            }
        }
    r.mcsClassOf.assign(n, -1);
    std::vector<int> rootIndex(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = find(parent, i);
        if (rootIndex[root] < 0)
            rootIndex[root] = r.mcsClassCount++;
        r.mcsClassOf[i] = rootIndex[root];
    }
    return r;
}

CheckResult check_dga(const Analysis& a, bool deep)
{
    return run_check(1, "DGA soundness", [&](CheckResult& r) {
        if (!check_d_squared(a.d))
            fail(r, a.name + ": d^2 != 0");
        if (!degree_homogeneous(a.d))
            fail(r, a.name + ": differential is not degree homogeneous");
        if (deep && !oracle::d_squared_zero(a.d))
            fail(r, a.name + ": brute-force expansion finds d^2 != 0");
        if (deep) {
            const Differential fd = front_differential(*a.diagram);
            if (fd.terms != a.d.terms)
                fail(r, a.name + ": front disk differential differs from the resolution differential");
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(a.d.generators.size()) + " generators";
    });
}

CheckResult check_disk_agreement(const Analysis& a)
{
    return run_check(2, "(0,-1)-disk agreement", [&](CheckResult& r) {
        int compared = 0;
        for (const auto& g : a.d.generators) {
            if (g.kind != GeneratorKind::Crossing || g.degree != 0)
                continue;
            WordSet fromDga;
            for (const auto& w : a.d.terms[g.id]) {
                int minusOnes = 0;
                bool others = true;
                for (int x : w) {
                    const int deg = a.d.generators[x].degree;
                    if (deg == -1)
                        ++minusOnes;
                    else if (deg != 0)
                        others = false;
                }
                if (minusOnes == 1 && others)
                    fromDga.insert(w);
            }
            DiskQuery q;
            q.kind = DiskClass::ZeroMinusOne;
            q.originGenerator = g.id;
            WordSet fromDisks;
            for (const auto& disk : enumerate_front_disks(*a.diagram, q))
                toggle(fromDisks, disk.word);
            compared += static_cast<int>(fromDga.size());
            if (fromDga != fromDisks)
                fail(r, a.name + ": " + generator_name(a.d, g.id) + " disagrees");
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(compared) + " monomials";
    });
}

CheckResult check_class_counts(const Analysis& a, const EquivalenceResult& eq, bool deep)
{
    return run_check(3, "homotopy classes = MCS classes", [&](CheckResult& r) {
        if (!eq.failures.empty())
            fail(r, a.name + ": " + eq.failures.front());
        if (eq.mcsClassCount != a.classes.count())
            fail(r, a.name + ": " + std::to_string(a.classes.count()) + " homotopy classes but " +
                        std::to_string(eq.mcsClassCount) + " MCS classes");
        for (std::size_t i = 0; i < a.augs.size(); ++i)
            for (std::size_t j = 0; j < a.augs.size(); ++j)
                if ((a.classes.classOf[i] == a.classes.classOf[j]) != (eq.mcsClassOf[i] == eq.mcsClassOf[j]))
                    fail(r, a.name + ": partitions differ");
        if (deep) {
            // Non-homotopic pairs: the brute-force search must agree that no H exists.
            for (std::size_t i = 0; i < a.augs.size(); ++i)
                for (std::size_t j = 0; j < a.augs.size(); ++j)
                    if (a.classes.classOf[i] != a.classes.classOf[j] &&
                        oracle::homotopy(a.d, values(a.augs[i]), values(a.augs[j])))
                        fail(r, a.name + ": brute force finds a homotopy the solver missed");
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(a.classes.count()) + " = " + std::to_string(eq.mcsClassCount) +
                       ", " + std::to_string(eq.replayed) + "/" + std::to_string(eq.traces) + " traces replayed";
    });
}

CheckResult check_aform_tables(const Analysis& a)
{
    return run_check(4, "A-form complexes = eps-half-disk counts", [&](CheckResult& r) {
        long compared = 0;
        for (const auto& eps : a.augs) {
            const MCS m = build_a_form(a.diagram, a.d, eps);
            const SlotTables tables = eps_half_disk_tables(*a.diagram, eps);
            for (int p = 1; p < a.diagram->slot_count(); ++p) {
                const auto& t = m.complexes()[m.event_item_index(p - 1) + 1];
                for (int i = 1; i <= t.size; ++i)
                    for (int j = i + 1; j <= t.size; ++j) {
                        ++compared;
                        if (t.c[i][j] != tables[p][i][j])
                            fail(r, a.name + ": eps " + support_name(a.d, eps) + " slot " + std::to_string(p) + " (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
                    }
            }
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(compared) + " entries";
    });
}

CheckResult check_mark_parity(const Analysis& a)
{
    return run_check(5, "mark parity = admissible disk parity", [&](CheckResult& r) {
        int compared = 0;
        for (const auto& [pair, cert] : a.classes.certificates) {
            const auto& eps = a.augs[pair.first];
            const auto& epsPrime = a.augs[pair.second];
            for (const auto& g : a.d.generators)
                if (g.kind == GeneratorKind::Crossing && g.degree == 0) {
                    ++compared;
                    if (!legmcs::check_prop21(*a.diagram, eps, epsPrime, cert, g.id))
                        fail(r, a.name + ": pair " + std::to_string(pair.first) + "->" + std::to_string(pair.second) +
                                    " at " + generator_name(a.d, g.id));
                }
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(compared) + " crossings";
    });
}

CheckResult check_sweep_invariant(const Analysis& a, const EquivalenceResult& eq)
{
    return run_check(6, "sweep invariant v = #H", [&](CheckResult& r) {
        if (eq.totals.invariantViolations)
            fail(r, a.name + ": " + std::to_string(eq.totals.invariantViolations) + " violations");
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(eq.totals.invariantChecks) + " checks over " +
                       std::to_string(eq.traces) + " sweeps";
    });
}

CheckResult check_homotopy_audit(const Analysis& a, bool deep)
{
    return run_check(7, "homotopy relation audit", [&](CheckResult& r) {
        const int n = static_cast<int>(a.augs.size());
        // homotopy_classes already audits; recheck from the certificate table.
        auto related = [&](int i, int j) { return a.classes.certificates.count({i, j}) > 0; };
        for (int i = 0; i < n; ++i) {
            if (!related(i, i))
                fail(r, a.name + ": not reflexive at " + std::to_string(i));
            for (int j = 0; j < n; ++j) {
                if (related(i, j) != related(j, i))
                    fail(r, a.name + ": not symmetric");
                for (int k = 0; k < n; ++k)
                    if (related(i, j) && related(j, k) && !related(i, k))
                        fail(r, a.name + ": not transitive");
            }
        }
        int minusOnes = 0;
        for (const auto& g : a.d.generators)
            minusOnes += g.kind == GeneratorKind::Crossing && g.degree == -1;
        if (deep && minusOnes <= 20) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (oracle::homotopy(a.d, values(a.augs[i]), values(a.augs[j])).has_value() != related(i, j))
                        fail(r, a.name + ": brute force disagrees on " + std::to_string(i) + "->" + std::to_string(j));
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(n) + " augmentations, " + std::to_string(a.classes.count()) +
                       " classes" + (deep ? ", brute force agrees" : "");
    });
}

PoincarePolynomial class_poincare(const Analysis& a, int classIndex)
{
    return homology_poincare(linearize(a.d, a.augs[a.classes.classes[classIndex].front()]));
}

CheckResult check_linhom(const Analysis& a)
{
    return run_check(8, "linearized homology per class", [&](CheckResult& r) {
        int expectedChi = 0;
        for (const auto& g : a.d.generators)
            expectedChi += (g.degree % 2 == 0) ? 1 : -1;
        for (const auto& cls : a.classes.classes) {
            std::optional<PoincarePolynomial> first;
            for (int idx : cls) {
                const auto lc = linearize(a.d, a.augs[idx]);
                if (!is_differential(lc))
                    fail(r, a.name + ": linearized differential does not square to zero");
                const auto p = homology_poincare(lc);
                if (euler_characteristic(p) != expectedChi)
                    fail(r, a.name + ": Euler characteristic " + std::to_string(euler_characteristic(p)) +
                                " != " + std::to_string(expectedChi));
                if (!first)
                    first = p;
                else if (*first != p)
                    fail(r, a.name + ": Poincare polynomial varies inside a class");
            }
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(a.classes.count()) + " classes";
    });
}

CheckResult check_rulings(const Analysis& a)
{
    return run_check(9, "ruling constant on classes", [&](CheckResult& r) {
        for (const auto& cls : a.classes.classes) {
            std::optional<NormalRuling> first;
            for (int idx : cls) {
                const auto ruling = ruling_from_mcs(build_a_form(a.diagram, a.d, a.augs[idx]));
                validate_ruling(*a.diagram, ruling);
                if (!first)
                    first = ruling;
                else if (!(*first == ruling))
                    fail(r, a.name + ": ruling varies inside a class");
            }
        }
        if (r.passed)
            r.detail = a.name + ": " + std::to_string(a.augs.size()) + " rulings validated";
    });
}

CheckResult check_count_pairs(const std::vector<Analysis>& corpus, const std::vector<EquivalenceResult>& eq)
{
    return run_check(11, "same knot, same counts", [&](CheckResult& r) {
        int groups = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (corpus[i].knotType.empty())
                continue;
            bool firstOfType = true;
            for (std::size_t j = 0; j < i; ++j)
                if (corpus[j].knotType == corpus[i].knotType)
                    firstOfType = false;
            if (!firstOfType)
                continue;
            int members = 0;
            for (std::size_t j = i; j < corpus.size(); ++j) {
                if (corpus[j].knotType != corpus[i].knotType)
                    continue;
                ++members;
                if (corpus[j].classes.count() != corpus[i].classes.count() ||
                    eq[j].mcsClassCount != eq[i].mcsClassCount)
                    fail(r, corpus[i].name + " and " + corpus[j].name + " have different class counts");
            }
            groups += members > 1;
        }
        if (groups == 0)
            fail(r, "no pair of fronts with the same knot type");
        if (r.passed)
            r.detail = std::to_string(groups) + " knot types with several fronts";
    });
}

std::vector<MoveStep> legal_moves(const MCS& mcs, const Differential& d)
{
    const FrontDiagram& dg = mcs.diagram();
    std::vector<MoveStep> out;
    for (int slot = 1; slot + 1 < dg.slot_count(); ++slot) {
        const auto items = mcs.slot_contents(slot);
        const int n = static_cast<int>(items.size());
        const int s = dg.strands(slot);
        for (int r = 0; r + 1 < n; ++r) {
            if (items[r].same_strands(items[r + 1]))
                out.push_back({1, "", slot, {r}});
            else
                out.push_back({interchange_move_id(items[r], items[r + 1]), "", slot, {r}});
        }
        for (int r = 0; r + 2 < n; ++r)
            if (interchange_move_id(items[r], items[r + 1]) == 4 &&
                items[r + 2].k == std::min(items[r].k, items[r + 1].k) &&
                items[r + 2].l == std::max(items[r].l, items[r + 1].l))
                out.push_back({4, "absorb", slot, {r}});
        if (n > 0) {
            const auto& last = items.back();
            if (int id = passage_move_id(dg, slot, last, true))
                out.push_back({id, "right", slot, {last.k, last.l}});
            const auto& firstItem = items.front();
            if (int id = passage_move_id(dg, slot - 1, firstItem, false); id && slot - 1 >= 1)
                out.push_back({id, "left", slot, {firstItem.k, firstItem.l}});
        }
        const auto& ev = dg.events()[slot];
        for (int r = 0; r <= n; ++r) {
            const auto& t = mcs.complex_at(slot, r);
            for (int k = 1; k <= s; ++k)
                for (int l = k + 1; l <= s; ++l) {
                    if (t.mu[k] == t.mu[l])
                        out.push_back({1, "insert", slot, {r, k, l}});
                    if (t.mu[k] == t.mu[l] - 1) {
                        out.push_back({13, "insert", slot, {r, k, l}});
                        const auto coll = move13_collection(mcs, slot, r, k, l);
                        bool present = !coll.empty() && r + static_cast<int>(coll.size()) <= n;
                        for (std::size_t m = 0; present && m < coll.size(); ++m)
                            present = items[r + m].same_strands(coll[m]);
                        if (present)
                            out.push_back({13, "remove", slot, {r, k, l}});
                    }
                }
        }
        if (ev.kind == EventKind::RightCusp) {
            const int p = ev.position;
            const auto& t = mcs.complex_at(slot, n);
            for (int j = p + 2; j <= s; ++j)
                if (t.mu[p + 1] == t.mu[j])
                    out.push_back({10, "insert", slot, {p + 1, j}});
            for (int i = 1; i < p; ++i)
                if (t.mu[i] == t.mu[p])
                    out.push_back({10, "insert", slot, {i, p}});
            if (n > 0) {
                const auto& last = items.back();
                if ((last.k == p + 1 && last.l > p + 1) || (last.l == p && last.k < p))
                    out.push_back({10, "remove", slot, {last.k, last.l}});
            }
        }
    }
    (void)d;
    return out;
}

FuzzStats fuzz_moves(const Analysis& a, int applications, unsigned seed)
{
    FuzzStats stats;
    if (a.augs.empty())
        return stats;
    std::mt19937 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    auto fresh = [&] {
        MCS m = build_a_form(a.diagram, a.d, a.augs[pick(a.augs.size())]);
        // A few random single handleslide insertions that keep the axioms.
        for (int tries = 0; tries < 20; ++tries) {
            const int slot = 1 + static_cast<int>(pick(a.diagram->event_count() - 1));
            const int s = a.diagram->strands(slot);
            if (s < 2)
                continue;
            const int k = 1 + static_cast<int>(pick(s - 1));
            const int l = k + 1 + static_cast<int>(pick(s - k));
            auto hs = m.handleslides();
            hs.push_back({slot, m.slot_size(slot), k, l});
            try {
                m = derive_complexes(a.diagram, std::move(hs));
            } catch (const InputError&) {
            } catch (const AxiomViolation&) {
            }
        }
        return m;
    };

    MCS cur = fresh();
    int stuck = 0;
    while (stats.applications < applications) {
        if (stats.applications % 200 == 0 || cur.handleslides().size() > 24)
            cur = fresh();
        auto moves = legal_moves(cur, a.d);
        if (moves.empty()) {
            // Some fronts (the standard unknot) admit no move at all.
            if (++stuck > 50)
                break;
            cur = fresh();
            continue;
        }
        stuck = 0;
        // Uniform over move ids, so rare patterns still get exercised.
        std::map<int, std::vector<const MoveStep*>> byId;
        for (const auto& m : moves)
            byId[m.move].push_back(&m);
        auto group = byId.begin();
        std::advance(group, pick(byId.size()));
        MoveStep step = *group->second[pick(group->second.size())];
        ++stats.applications;
        ++stats.byMove[step.move];
        try {
            MCS next = apply_move(cur, step);
            for (std::size_t t = 0; t < next.complexes().size(); ++t) {
                const auto& c = next.complexes()[t];
                if (!c.is_triangular() || !c.squares_to_zero() || !c.has_degree_minus_one())
                    throw PropertyViolation("AxiomViolation", "complex " + std::to_string(t));
            }
            cur = std::move(next);
        } catch (const Error& e) {
            ++stats.failures;
            if (stats.failureNotes.size() < 5)
                stats.failureNotes.push_back(a.name + " " + describe(step) + ": " + e.what());
        }
    }
    return stats;
}

FuzzStats fuzz_corpus(const std::vector<Analysis>& corpus, int applications, unsigned seed)
{
    FuzzStats total;
    for (int round = 0; total.applications < applications; ++round) {
        int remaining = applications - total.applications;
        int movable = 0;
        for (const auto& a : corpus)
            movable += !a.augs.empty();
        if (movable == 0)
            break;
        const int before = total.applications;
        for (const auto& a : corpus) {
            if (a.augs.empty())
                continue;
            const auto s = fuzz_moves(a, (remaining + movable - 1) / movable, seed + 7919u * round + total.applications);
            total.applications += s.applications;
            total.failures += s.failures;
            for (const auto& [m, n] : s.byMove)
                total.byMove[m] += n;
            for (const auto& note : s.failureNotes)
                if (total.failureNotes.size() < 5)
                    total.failureNotes.push_back(note);
        }
        if (total.applications == before)
            break;
    }
    return total;
}

CheckResult check_fuzz(const std::vector<Analysis>& corpus, int applications, unsigned seed)
{
    return run_check(10, "move fuzz", [&](CheckResult& r) {
        const auto s = fuzz_corpus(corpus, applications, seed);
        if (s.failures)
            fail(r, std::to_string(s.failures) + " failures, first: " + s.failureNotes.front());
        if (s.applications < applications)
            fail(r, "only " + std::to_string(s.applications) + " applications possible");
        if (r.passed) {
            r.detail = std::to_string(s.applications) + " applications, 0 failures; moves";
            for (const auto& [m, n] : s.byMove)
                r.detail += " " + std::to_string(m) + ":" + std::to_string(n);
        }
    });
}

nlohmann::json invariant_report(const Analysis& a, const EquivalenceResult& eq, const std::vector<CheckResult>& checks)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : a.d.generators)
        gens.push_back({{"name", generator_name(a.d, g.id)},
                        {"kind", g.kind == GeneratorKind::Crossing ? "crossing" : "right_cusp"},
                        {"event", g.eventIndex},
                        {"degree", g.degree}});
    nlohmann::json classes = nlohmann::json::array();
    std::map<std::string, std::pair<nlohmann::json, int>> multiplicity;
    for (int c = 0; c < a.classes.count(); ++c) {
        nlohmann::json members = nlohmann::json::array();
        for (int idx : a.classes.classes[c])
            members.push_back(support_name(a.d, a.augs[idx]));
        const auto poly = class_poincare(a, c);
        const auto ruling = ruling_from_mcs(build_a_form(a.diagram, a.d, a.augs[a.classes.classes[c].front()]));
        classes.push_back({{"augmentations", members},
                           {"poincare", to_json(poly)},
                           {"poincare_string", format_poincare(poly)},
                           {"ruling", ruling.fingerprint()}});
        auto& slot = multiplicity[format_poincare(poly)];
        slot.first = to_json(poly);
        ++slot.second;
    }
    nlohmann::json mult = nlohmann::json::array();
    for (const auto& [text, entry] : multiplicity)
        mult.push_back({{"poincare", entry.first}, {"poincare_string", text}, {"classes", entry.second}});
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& c : checks)
        flags[std::to_string(c.criterion)] = {{"name", c.name}, {"passed", c.passed}};
    return {{"front", a.diagram->word()},
            {"rotation", a.diagram->rotation()},
            {"generators", gens},
            {"augmentations", a.augs.size()},
            {"homotopy_classes", a.classes.count()},
            {"mcs_classes", eq.mcsClassCount},
            {"classes", classes},
            {"poincare_multiplicity", mult},
            {"verification", flags}};
}

}  // namespace legmcs
