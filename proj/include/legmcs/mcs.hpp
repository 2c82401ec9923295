#pragma once

// Morse complex sequences with simple left cusps.
//
// Handleslides live in slots. Slot s is the gap between event s-1 and event
// s; inside a slot they are ordered left to right by rank. The timeline is
// event 0, the handleslides of slot 1, event 1, the handleslides of slot 2, and
// so on. complexes()[t] is the chain complex after the first t timeline items,
// so complexes()[0] is the empty complex at the far left.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "legmcs/augment.hpp"
#include "legmcs/front.hpp"

namespace legmcs {

// Upper triangular differential on strands 1..size; c(i, j) = <d e_i, e_j>.
struct TriangularComplex {
    int size = 0;
    std::vector<int> mu;                        // 1-based
    std::vector<std::vector<std::uint8_t>> c;   // 1-based, (size+1) x (size+1)

    explicit TriangularComplex(int n = 0) : size(n), mu(n + 1, 0), c(n + 1, std::vector<std::uint8_t>(n + 1, 0)) {}
    std::uint8_t at(int i, int j) const { return c[i][j]; }
    bool operator==(const TriangularComplex&) const = default;

    bool is_triangular() const;
    bool squares_to_zero() const;
    bool has_degree_minus_one() const;
    // Conjugation by e_k -> e_k + e_l.
    void handleslide(int k, int l);
};

struct Handleslide {
    int slot = 0;
    int rank = 0;
    int k = 0;  // upper endpoint
    int l = 0;  // lower endpoint

    bool same_strands(const Handleslide& o) const { return k == o.k && l == o.l; }
    bool operator==(const Handleslide&) const = default;
};

class MCS {
public:
    const FrontDiagram& diagram() const { return *diagram_; }
    const std::shared_ptr<const FrontDiagram>& diagram_ptr() const { return diagram_; }
    const std::vector<Handleslide>& handleslides() const { return handleslides_; }
    const std::vector<TriangularComplex>& complexes() const { return complexes_; }

    int item_count() const { return diagram_->event_count() + static_cast<int>(handleslides_.size()); }
    int slot_size(int slot) const;
    // Handleslides of one slot, left to right.
    std::vector<Handleslide> slot_contents(int slot) const;
    // Timeline index of the handleslide at (slot, rank); rank may equal the
    // slot size to mean the end of the slot.
    int item_index(int slot, int rank) const;
    int event_item_index(int event) const;
    // Complex just left of (slot, rank).
    const TriangularComplex& complex_at(int slot, int rank) const;
    const TriangularComplex& complex_before_event(int event) const;

    bool operator==(const MCS& o) const { return diagram_->word() == o.diagram_->word() && handleslides_ == o.handleslides_; }

    friend MCS derive_complexes(std::shared_ptr<const FrontDiagram> diagram, std::vector<Handleslide> handleslides);

private:
    std::shared_ptr<const FrontDiagram> diagram_;
    std::vector<Handleslide> handleslides_;
    std::vector<TriangularComplex> complexes_;
};

// Sorts and re-ranks the handleslides, then builds every complex. Throws
// InputError for malformed handleslides and AxiomViolation when a complex
// breaks the MCS axioms.
MCS derive_complexes(std::shared_ptr<const FrontDiagram> diagram, std::vector<Handleslide> handleslides);

MCS build_a_form(std::shared_ptr<const FrontDiagram> diagram, const Differential& d, const Augmentation& eps);
// Throws InputError("NotAForm") when the MCS is not in A-form.
Augmentation augmentation_of(const MCS& mcs, const Differential& d);

// One MCS move. move is 1..13; variant selects direction or the inverse form
// (see apply_move). slot and args locate the pattern.
struct MoveStep {
    int move = 0;
    std::string variant;
    int slot = 0;
    std::vector<int> args;

    bool operator==(const MoveStep&) const = default;
};

using MoveTrace = std::vector<MoveStep>;

// Move catalog:
//   1  ""        args {rank}: cancel the identical pair at rank, rank+1
//      "insert"  args {rank, k, l}: insert an identical pair
//   2-6 ""       args {rank}: interchange rank and rank+1; the id must match the
//                endpoint pattern (2 disjoint, 3 same upper, 4 chained,
//                5 same lower, 6 nested or interleaved). Move 4 emits the
//                composite handleslide to the right of the pair.
//   4  "absorb"  args {rank}: inverse of move 4
//   7-9 "right"  args {k, l}: last handleslide of slot crosses the crossing
//                event `slot`; "left" args {k, l}: first handleslide of slot
//                crosses event slot-1 (7 no endpoint on the crossing strands,
//                8 lower endpoint on them, 9 upper endpoint on them)
//   10 "remove"  args {k, l}: drop the last handleslide of slot, left of the
//                right cusp event `slot`, with an endpoint on its lower
//                (k+1, j) or upper (i, k) cusp strand; "insert" is the inverse;
//                "reflected" (at a left cusp) is not a move here.
//   11, 12 "right"/"left" args {k, l}: cross a cusp; 11 when the handleslide
//                spans the cusp strands, 12 when it is disjoint from them
//   13 "insert"  args {rank, k, l}: insert the collection K for the pair k < l
//                with mu(k) = mu(l) - 1; "remove" deletes it again
MCS apply_move(const MCS& mcs, const MoveStep& step);

// Move id (2-6) that interchanges the adjacent pair left, right; 0 when they
// have the same strands.
int interchange_move_id(const Handleslide& left, const Handleslide& right);
// Move id (7-9, 11, 12) that carries h across the event, or 0 when no move
// does (endpoints on both crossing strands, or on a dying cusp strand).
int passage_move_id(const FrontDiagram& diagram, int event, const Handleslide& h, bool rightward);

MCS replay(const MCS& start, const MoveTrace& trace);

// The handleslides move 13 would insert at (slot, rank) for strands k < l, in
// insertion order.
std::vector<Handleslide> move13_collection(const MCS& mcs, int slot, int rank, int k, int l);

nlohmann::json to_json(const MCS& mcs);
MCS mcs_from_json(std::shared_ptr<const FrontDiagram> diagram, const nlohmann::json& j);
nlohmann::json to_json(const MoveTrace& trace);
MoveTrace trace_from_json(const nlohmann::json& j);
std::string describe(const MoveStep& step);

// Sweep from C to C' along a chain homotopy.
struct SweepOptions {
    bool checkInvariant = true;   // compare V with the (eps,eps',H)-half-disk counts
    bool checkReplay = true;      // replay the trace from C and compare with C'
};

struct SweepStats {
    int invariantChecks = 0;
    int invariantViolations = 0;
    int markFlips = 0;
    std::vector<int> flipCrossings;  // generator ids whose mark changed
};

MoveTrace sweep_equivalence(const MCS& c, const MCS& cPrime, const Differential& d, const HomotopyCertificate& cert,
                            const SweepOptions& options = {}, SweepStats* stats = nullptr);

std::optional<MoveTrace> are_equivalent(const MCS& c, const MCS& cPrime, const Differential& d,
                                        const SweepOptions& options = {});

// Pairing of strands in every slot: partner[slot][i] (1-based, 0 when the slot
// is empty).
struct NormalRuling {
    std::vector<std::vector<int>> partner;
    std::vector<int> switches;  // event indices of switched crossings

    bool operator==(const NormalRuling&) const = default;
    std::string fingerprint() const;
};

NormalRuling ruling_from_mcs(const MCS& mcs);
// Throws PropertyViolation("RulingAxiomViolation") with the failed axiom.
void validate_ruling(const FrontDiagram& diagram, const NormalRuling& ruling);

}  // namespace legmcs
