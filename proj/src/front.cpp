#include "legmcs/front.hpp"

#include <cctype>
#include <sstream>

#include "legmcs/errors.hpp"

namespace legmcs {

char event_letter(EventKind kind)
{
    switch (kind) {
    case EventKind::LeftCusp: return 'L';
    case EventKind::RightCusp: return 'R';
    case EventKind::Crossing: return 'X';
    }
    return '?';
}

std::vector<FrontEvent> parse_front_word(std::string_view text)
{
    std::vector<FrontEvent> events;
    std::size_t i = 0;
    int tokenIndex = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#')
            ++i;
        std::string_view token = text.substr(start, i - start);

        EventKind kind;
        switch (token[0]) {
        case 'L': kind = EventKind::LeftCusp; break;
        case 'R': kind = EventKind::RightCusp; break;
        case 'X': kind = EventKind::Crossing; break;
        default:
            throw ParseError(tokenIndex, "unknown event letter in '" + std::string(token) + "'");
        }
        if (token.size() < 2)
            throw ParseError(tokenIndex, "missing position in '" + std::string(token) + "'");
        long value = 0;
        for (std::size_t k = 1; k < token.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(token[k])))
                throw ParseError(tokenIndex, "position is not a number in '" + std::string(token) + "'");
            value = value * 10 + (token[k] - '0');
            if (value > 1000000)
                throw ParseError(tokenIndex, "position too large in '" + std::string(token) + "'");
        }
        if (value < 1)
            throw ParseError(tokenIndex, "position must be >= 1 in '" + std::string(token) + "'");
        events.push_back({kind, static_cast<int>(value)});
        ++tokenIndex;
    }
    if (events.empty())
        throw ParseError(-1, "empty front word");
    return events;
}

std::string format_front_word(const std::vector<FrontEvent>& events)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i)
            out << ' ';
        out << event_letter(events[i].kind) << events[i].position;
    }
    return out.str();
}

FrontDiagram build_diagram(const std::vector<FrontEvent>& events)
{
    if (events.empty())
        throw DiagramError("front has no events");

    FrontDiagram d;
    d.events_ = events;
    d.strandCounts_.push_back(0);
    d.slotArcs_.push_back({});

    std::vector<int> current;
    for (int e = 0; e < static_cast<int>(events.size()); ++e) {
        const auto& ev = events[e];
        const int k = ev.position;
        const int s = static_cast<int>(current.size());
        switch (ev.kind) {
        case EventKind::LeftCusp: {
            if (k > s + 1)
                throw DiagramError("left cusp at event " + std::to_string(e) + " has position " + std::to_string(k) +
                                   " but only " + std::to_string(s) + " strands");
            int upper = static_cast<int>(d.arcs_.size());
            d.arcs_.push_back({upper, e, -1});
            d.arcs_.push_back({upper + 1, e, -1});
            current.insert(current.begin() + (k - 1), {upper, upper + 1});
            break;
        }
        case EventKind::RightCusp: {
            if (k + 1 > s)
                throw DiagramError("right cusp at event " + std::to_string(e) + " has position " + std::to_string(k) +
                                   " but only " + std::to_string(s) + " strands");
            d.arcs_[current[k - 1]].rightCusp = e;
            d.arcs_[current[k]].rightCusp = e;
            current.erase(current.begin() + (k - 1), current.begin() + (k + 1));
            break;
        }
        case EventKind::Crossing:
            if (k + 1 > s)
                throw DiagramError("crossing at event " + std::to_string(e) + " has position " + std::to_string(k) +
                                   " but only " + std::to_string(s) + " strands");
            std::swap(current[k - 1], current[k]);
            break;
        }
        d.strandCounts_.push_back(static_cast<int>(current.size()));
        d.slotArcs_.push_back(current);
    }
    if (!current.empty())
        throw DiagramError("front does not close: " + std::to_string(current.size()) + " strands remain at the right");

    // Each cusp joins two arcs; walk the resulting cycle.
    const int arcCount = static_cast<int>(d.arcs_.size());
    std::vector<std::vector<int>> cuspArcs(events.size());
    for (const auto& a : d.arcs_) {
        cuspArcs[a.leftCusp].push_back(a.id);
        cuspArcs[a.rightCusp].push_back(a.id);
    }
    std::vector<bool> seen(arcCount, false);
    int arc = 0;
    bool atRight = true;  // walking towards the right cusp of `arc`
    while (!seen[arc]) {
        seen[arc] = true;
        d.knotCycle_.push_back(arc);
        int cusp = atRight ? d.arcs_[arc].rightCusp : d.arcs_[arc].leftCusp;
        d.cycleCusps_.push_back(cusp);
        const auto& pair = cuspArcs[cusp];
        arc = pair[0] == arc ? pair[1] : pair[0];
        atRight = !atRight;
    }
    if (static_cast<int>(d.knotCycle_.size()) != arcCount)
        throw DiagramError("front has more than one component (" + std::to_string(d.knotCycle_.size()) + " of " +
                           std::to_string(arcCount) + " arcs on the first component)");
    return d;
}

std::pair<int, int> FrontDiagram::cusp_arcs(int e) const
{
    const auto& ev = events_.at(e);
    if (ev.kind == EventKind::LeftCusp)
        return {slotArcs_[e + 1][ev.position - 1], slotArcs_[e + 1][ev.position]};
    if (ev.kind == EventKind::RightCusp)
        return {slotArcs_[e][ev.position - 1], slotArcs_[e][ev.position]};
    throw InvalidArgument("event " + std::to_string(e) + " is not a cusp");
}

std::pair<int, int> FrontDiagram::crossing_arcs(int e) const
{
    const auto& ev = events_.at(e);
    if (ev.kind != EventKind::Crossing)
        throw InvalidArgument("event " + std::to_string(e) + " is not a crossing");
    return {slotArcs_[e][ev.position - 1], slotArcs_[e][ev.position]};
}

int FrontDiagram::maslov_of_arc(int arc) const
{
    if (!maslov_)
        throw InvalidArgument("Maslov potential has not been computed");
    return maslov_->at(arc);
}

const std::vector<int>& FrontDiagram::maslov_values() const
{
    if (!maslov_)
        throw InvalidArgument("Maslov potential has not been computed");
    return *maslov_;
}

int rotation_number(const FrontDiagram& d)
{
    // Walk the cycle; passing a cusp from its upper arc to its lower arc is a
    // downward cusp.
    const auto& cycle = d.knot_cycle();
    int down = 0, up = 0;
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        int from = cycle[i];
        int upper = d.cusp_arcs(d.cycle_cusps()[i]).first;
        if (from == upper)
            ++down;
        else
            ++up;
    }
    return (down - up) / 2;
}

FrontDiagram compute_maslov(const FrontDiagram& diagram)
{
    int firstLeft = -1;
    for (int e = 0; e < diagram.event_count(); ++e)
        if (diagram.events()[e].kind == EventKind::LeftCusp) {
            firstLeft = e;
            break;
        }
    return compute_maslov(diagram, diagram.cusp_arcs(firstLeft).first, 1);
}

FrontDiagram compute_maslov(const FrontDiagram& diagram, int baseArc, int baseValue)
{
    const int n = static_cast<int>(diagram.knot_cycle().size());
    const auto& cycle = diagram.knot_cycle();
    int start = 0;
    while (cycle[start] != baseArc)
        ++start;

    std::vector<int> mu(diagram.arcs().size(), 0);
    mu[baseArc] = baseValue;
    for (int step = 0; step < n; ++step) {
        int from = cycle[(start + step) % n];
        int to = cycle[(start + step + 1) % n];
        int cusp = diagram.cycle_cusps()[(start + step) % n];
        auto [upper, lower] = diagram.cusp_arcs(cusp);
        int expected = from == upper ? mu[from] - 1 : mu[from] + 1;
        if (step + 1 == n) {
            if (mu[to] != expected)
                throw MaslovInconsistent(cusp, rotation_number(diagram));
        } else {
            (void)lower;
            mu[to] = expected;
        }
    }

    FrontDiagram out = diagram;
    out.maslov_ = std::move(mu);
    out.rotation_ = rotation_number(diagram);
    return out;
}

std::vector<Generator> grade_generators(const FrontDiagram& d)
{
    std::vector<Generator> gens;
    for (int e = 0; e < d.event_count(); ++e) {
        const auto& ev = d.events()[e];
        if (ev.kind == EventKind::LeftCusp)
            continue;
        Generator g;
        g.id = static_cast<int>(gens.size());
        g.eventIndex = e;
        g.position = ev.position;
        if (ev.kind == EventKind::RightCusp) {
            g.kind = GeneratorKind::RightCusp;
            g.degree = 1;
        } else {
            g.kind = GeneratorKind::Crossing;
            // The strand entering at level k descends through the crossing.
            auto [top, bottom] = d.crossing_arcs(e);
            g.degree = d.maslov_of_arc(top) - d.maslov_of_arc(bottom);
        }
        gens.push_back(g);
    }
    return gens;
}

FrontDiagram load_front(std::string_view text)
{
    return compute_maslov(build_diagram(parse_front_word(text)));
}

}  // namespace legmcs
