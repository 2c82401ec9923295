#pragma once

// Property suites run by `legmcs verify` and the acceptance driver. Each
// check returns a result instead of throwing for invariant failures; budget
// errors still propagate.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "legmcs/augment.hpp"
#include "legmcs/linhom.hpp"
#include "legmcs/mcs.hpp"

namespace legmcs {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0;
};

struct Analysis {
    std::string name;
    std::string knotType;  // from a "# knot: <type>" line, empty when absent
    std::shared_ptr<const FrontDiagram> diagram;
    Differential d;
    std::vector<Augmentation> augs;
    HomotopyClasses classes;
};

Analysis analyze(std::string name, std::string_view text);
std::string knot_type_tag(std::string_view text);
// Corpus entries (*.front) of a directory, sorted by file name.
std::vector<Analysis> load_corpus(const std::string& dir);

// A-form MCSs modulo are_equivalent.
struct EquivalenceResult {
    int mcsClassCount = 0;
    std::vector<int> mcsClassOf;
    int pairsTried = 0;
    int traces = 0;
    int replayed = 0;
    std::size_t totalSteps = 0;
    SweepStats totals;
    std::vector<std::string> failures;
};

EquivalenceResult mcs_classes(const Analysis& a, const SweepOptions& options);

CheckResult check_dga(const Analysis& a, bool deep);
CheckResult check_disk_agreement(const Analysis& a);
CheckResult check_class_counts(const Analysis& a, const EquivalenceResult& eq, bool deep);
CheckResult check_aform_tables(const Analysis& a);
CheckResult check_mark_parity(const Analysis& a);
CheckResult check_sweep_invariant(const Analysis& a, const EquivalenceResult& eq);
CheckResult check_homotopy_audit(const Analysis& a, bool deep);
CheckResult check_linhom(const Analysis& a);
CheckResult check_rulings(const Analysis& a);
CheckResult check_count_pairs(const std::vector<Analysis>& corpus, const std::vector<EquivalenceResult>& eq);

struct FuzzStats {
    int applications = 0;
    int failures = 0;
    std::map<int, int> byMove;  // applications per move id
    std::vector<std::string> failureNotes;
};

// Random legal moves on random MCSs built from A-forms by legal handleslide
// insertions.
FuzzStats fuzz_moves(const Analysis& a, int applications, unsigned seed);
// Spreads at least `applications` moves over the corpus entries that admit any.
FuzzStats fuzz_corpus(const std::vector<Analysis>& corpus, int applications, unsigned seed);
CheckResult check_fuzz(const std::vector<Analysis>& corpus, int applications, unsigned seed);

// Every move whose local pattern is present in mcs, insertions included.
std::vector<MoveStep> legal_moves(const MCS& mcs, const Differential& d);

PoincarePolynomial class_poincare(const Analysis& a, int classIndex);

nlohmann::json invariant_report(const Analysis& a, const EquivalenceResult& eq, const std::vector<CheckResult>& checks);

std::uint64_t fnv1a(std::string_view text);

}  // namespace legmcs
