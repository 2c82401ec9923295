#pragma once

// Front diagrams given as event words.
//
// A front is a left-to-right sequence of events (left cusps, right cusps and
// crossings). Strands at a vertical slice are numbered 1, 2, ... from top to
// bottom; an event at position k involves the strands at levels k and k+1.
// Slot s is the gap between event s-1 and event s, so slot 0 and slot n are the
// empty leading and trailing slices.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legmcs {

enum class EventKind { LeftCusp, RightCusp, Crossing };

char event_letter(EventKind kind);

struct FrontEvent {
    EventKind kind;
    int position;  // 1-based level k

    bool operator==(const FrontEvent&) const = default;
};

std::vector<FrontEvent> parse_front_word(std::string_view text);
std::string format_front_word(const std::vector<FrontEvent>& events);

// A smooth piece of the knot running from a left cusp to a right cusp.
struct Arc {
    int id = 0;
    int leftCusp = -1;   // event index
    int rightCusp = -1;  // event index
};

enum class GeneratorKind { Crossing, RightCusp };

struct Generator {
    int id = 0;
    GeneratorKind kind = GeneratorKind::Crossing;
    int eventIndex = 0;
    int position = 0;  // level k of the event
    int degree = 0;
};

class FrontDiagram {
public:
    const std::vector<FrontEvent>& events() const { return events_; }
    int event_count() const { return static_cast<int>(events_.size()); }
    int slot_count() const { return static_cast<int>(strandCounts_.size()); }
    const std::vector<int>& strand_counts() const { return strandCounts_; }
    int strands(int slot) const { return strandCounts_.at(slot); }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& knot_cycle() const { return knotCycle_; }
    // cycle_cusps()[i] is the cusp joining knot_cycle()[i] to knot_cycle()[i+1].
    const std::vector<int>& cycle_cusps() const { return cycleCusps_; }

    // Arc occupying the given 1-based level at a slot.
    int arc_at(int slot, int level) const { return slotArcs_.at(slot).at(level - 1); }
    const std::vector<int>& arcs_at(int slot) const { return slotArcs_.at(slot); }

    // Arcs meeting at a cusp event: {upper, lower}.
    std::pair<int, int> cusp_arcs(int eventIndex) const;
    // Arcs entering a crossing from the left: {level k, level k+1}.
    std::pair<int, int> crossing_arcs(int eventIndex) const;

    bool has_maslov() const { return maslov_.has_value(); }
    int maslov_of_arc(int arc) const;
    int maslov(int slot, int level) const { return maslov_of_arc(arc_at(slot, level)); }
    const std::vector<int>& maslov_values() const;
    int rotation() const { return rotation_; }

    std::string word() const { return format_front_word(events_); }

    friend FrontDiagram build_diagram(const std::vector<FrontEvent>& events);
    friend FrontDiagram compute_maslov(const FrontDiagram& diagram, int baseArc, int baseValue);

private:
    std::vector<FrontEvent> events_;
    std::vector<int> strandCounts_;
    std::vector<std::vector<int>> slotArcs_;
    std::vector<Arc> arcs_;
    std::vector<int> knotCycle_;
    std::vector<int> cycleCusps_;
    std::optional<std::vector<int>> maslov_;
    int rotation_ = 0;
};

FrontDiagram build_diagram(const std::vector<FrontEvent>& events);

// Rotation number (d - u) / 2 from the cusp orientations along the knot cycle.
int rotation_number(const FrontDiagram& diagram);

// Default normalization: the upper arc of the first left cusp gets potential 1.
FrontDiagram compute_maslov(const FrontDiagram& diagram);
FrontDiagram compute_maslov(const FrontDiagram& diagram, int baseArc, int baseValue);

std::vector<Generator> grade_generators(const FrontDiagram& diagram);

// parse + build + Maslov in one step.
FrontDiagram load_front(std::string_view text);

}  // namespace legmcs
