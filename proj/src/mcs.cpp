#include "legmcs/mcs.hpp"

#include <algorithm>

#include "legmcs/errors.hpp"

namespace legmcs {

bool TriangularComplex::is_triangular() const
{
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= i; ++j)
            if (c[i][j])
                return false;
    return true;
}

bool TriangularComplex::squares_to_zero() const
{
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j) {
            std::uint8_t sum = 0;
            for (int m = i + 1; m < j; ++m)
                sum ^= c[i][m] & c[m][j];
            if (sum)
                return false;
        }
    return true;
}

bool TriangularComplex::has_degree_minus_one() const
{
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j)
            if (c[i][j] && mu[i] != mu[j] + 1)
                return false;
    return true;
}

void TriangularComplex::handleslide(int k, int l)
{
    // Rows are images: new row k = row k + row l, then column l += column k.
    for (int j = 1; j <= size; ++j)
        c[k][j] ^= c[l][j];
    for (int i = 1; i <= size; ++i)
        c[i][l] ^= c[i][k];
}

int MCS::slot_size(int slot) const
{
    return static_cast<int>(std::count_if(handleslides_.begin(), handleslides_.end(),
                                          [slot](const Handleslide& h) { return h.slot == slot; }));
}

std::vector<Handleslide> MCS::slot_contents(int slot) const
{
    std::vector<Handleslide> out;
    for (const auto& h : handleslides_)
        if (h.slot == slot)
            out.push_back(h);
    return out;
}

int MCS::item_index(int slot, int rank) const
{
    int before = 0;
    for (const auto& h : handleslides_)
        if (h.slot < slot)
            ++before;
    return slot + before + rank;
}

int MCS::event_item_index(int event) const
{
    int before = 0;
    for (const auto& h : handleslides_)
        if (h.slot <= event)
            ++before;
    return event + before;
}

const TriangularComplex& MCS::complex_at(int slot, int rank) const
{
    return complexes_.at(item_index(slot, rank));
}

const TriangularComplex& MCS::complex_before_event(int event) const
{
    return complexes_.at(event_item_index(event));
}

MCS derive_complexes(std::shared_ptr<const FrontDiagram> diagram, std::vector<Handleslide> handleslides)
{
    const FrontDiagram& d = *diagram;
    if (!d.has_maslov())
        throw InvalidArgument("MCS needs a graded diagram");
    std::stable_sort(handleslides.begin(), handleslides.end(), [](const Handleslide& a, const Handleslide& b) {
        return a.slot != b.slot ? a.slot < b.slot : a.rank < b.rank;
    });
    for (std::size_t n = 0; n < handleslides.size(); ++n) {
        auto& h = handleslides[n];
        h.rank = (n > 0 && handleslides[n - 1].slot == h.slot) ? handleslides[n - 1].rank + 1 : 0;
        if (h.slot < 1 || h.slot >= d.slot_count() - 1)
            throw InputError("HandleslideInvalid", "slot " + std::to_string(h.slot) + " cannot hold handleslides");
        if (h.k < 1 || h.l <= h.k || h.l > d.strands(h.slot))
            throw InputError("HandleslideInvalid", "strands (" + std::to_string(h.k) + "," + std::to_string(h.l) +
                                                       ") are out of range in slot " + std::to_string(h.slot));
        if (d.maslov(h.slot, h.k) != d.maslov(h.slot, h.l))
            throw InputError("HandleslideInvalid", "strands (" + std::to_string(h.k) + "," + std::to_string(h.l) +
                                                       ") in slot " + std::to_string(h.slot) +
                                                       " have different Maslov potentials");
    }

    MCS out;
    out.diagram_ = diagram;
    out.handleslides_ = std::move(handleslides);
    auto& cx = out.complexes_;
    cx.emplace_back(0);

    auto grade = [&](TriangularComplex& t, int slot) {
        for (int i = 1; i <= t.size; ++i)
            t.mu[i] = d.maslov(slot, i);
    };
    auto check = [&](const TriangularComplex& t, int position) {
        if (!t.is_triangular())
            throw AxiomViolation("3", position, "differential is not triangular");
        if (!t.squares_to_zero())
            throw AxiomViolation("3", position, "d^2 != 0");
        if (!t.has_degree_minus_one())
            throw AxiomViolation("3", position, "differential does not have degree -1");
    };

    std::size_t next = 0;
    for (int e = 0; e < d.event_count(); ++e) {
        const auto& ev = d.events()[e];
        const int k = ev.position;
        const TriangularComplex& prev = cx.back();
        const int position = static_cast<int>(cx.size()) - 1;
        TriangularComplex t;
        switch (ev.kind) {
        case EventKind::LeftCusp: {
            t = TriangularComplex(prev.size + 2);
            auto tau = [k](int i) { return i < k ? i : i + 2; };
            for (int i = 1; i <= prev.size; ++i)
                for (int j = i + 1; j <= prev.size; ++j)
                    t.c[tau(i)][tau(j)] = prev.c[i][j];
            t.c[k][k + 1] = 1;
            break;
        }
        case EventKind::Crossing: {
            if (prev.c[k][k + 1])
                throw AxiomViolation("4", position, "<d e_" + std::to_string(k) + ", e_" + std::to_string(k + 1) +
                                                        "> = 1 before the crossing at event " + std::to_string(e));
            t = TriangularComplex(prev.size);
            auto sigma = [k](int i) { return i == k ? k + 1 : i == k + 1 ? k : i; };
            for (int i = 1; i <= prev.size; ++i)
                for (int j = i + 1; j <= prev.size; ++j)
                    if (prev.c[i][j])
                        t.c[sigma(i)][sigma(j)] = 1;
            break;
        }
        case EventKind::RightCusp: {
            if (!prev.c[k][k + 1])
                throw AxiomViolation("4", position, "<d e_" + std::to_string(k) + ", e_" + std::to_string(k + 1) +
                                                        "> = 0 before the right cusp at event " + std::to_string(e));
            t = TriangularComplex(prev.size - 2);
            auto pi = [k](int i) { return i < k ? i : i + 2; };
            for (int i = 1; i <= t.size; ++i)
                for (int j = i + 1; j <= t.size; ++j)
                    t.c[i][j] = prev.c[pi(i)][pi(j)] ^ (prev.c[pi(i)][k + 1] & prev.c[k][pi(j)]);
            break;
        }
        }
        grade(t, e + 1);
        check(t, position + 1);
        cx.push_back(std::move(t));

        while (next < out.handleslides_.size() && out.handleslides_[next].slot == e + 1) {
            const auto& h = out.handleslides_[next++];
            TriangularComplex u = cx.back();
            u.handleslide(h.k, h.l);
            check(u, static_cast<int>(cx.size()));
            cx.push_back(std::move(u));
        }
    }
    return out;
}

MCS build_a_form(std::shared_ptr<const FrontDiagram> diagram, const Differential& d, const Augmentation& eps)
{
    std::vector<Handleslide> hs;
    for (const auto& g : d.generators)
        if (eps.values[g.id]) {
            if (g.kind != GeneratorKind::Crossing || g.degree != 0)
                throw InvalidArgument("augmentation is nonzero on " + generator_name(d, g.id));
            hs.push_back({g.eventIndex, 0, g.position, g.position + 1});
        }
    return derive_complexes(std::move(diagram), std::move(hs));
}

Augmentation augmentation_of(const MCS& mcs, const Differential& d)
{
    Augmentation eps{std::vector<std::uint8_t>(d.generators.size(), 0)};
    std::vector<int> genOfEvent(mcs.diagram().event_count(), -1);
    for (const auto& g : d.generators)
        genOfEvent[g.eventIndex] = g.id;
    for (const auto& h : mcs.handleslides()) {
        auto fail = [&](const std::string& why) {
            throw InputError("NotAForm", "handleslide (" + std::to_string(h.k) + "," + std::to_string(h.l) +
                                             ") in slot " + std::to_string(h.slot) + " " + why);
        };
        if (mcs.slot_size(h.slot) != 1)
            fail("shares its slot with another handleslide");
        const int e = h.slot;
        if (e >= mcs.diagram().event_count() || mcs.diagram().events()[e].kind != EventKind::Crossing)
            fail("is not just left of a crossing");
        const auto& g = d.generators[genOfEvent[e]];
        if (g.position != h.k || h.l != h.k + 1)
            fail("does not join the strands of the crossing to its right");
        if (g.degree != 0)
            fail("marks a crossing of degree " + std::to_string(g.degree));
        eps.values[g.id] = 1;
    }
    return eps;
}

nlohmann::json to_json(const MCS& mcs)
{
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& h : mcs.handleslides())
        hs.push_back({{"slot", h.slot}, {"rank", h.rank}, {"strands", {h.k, h.l}}});
    return {{"front", mcs.diagram().word()}, {"handleslides", hs}};
}

MCS mcs_from_json(std::shared_ptr<const FrontDiagram> diagram, const nlohmann::json& j)
{
    std::vector<Handleslide> hs;
    try {
        if (j.contains("front") && j.at("front").get<std::string>() != diagram->word())
            throw InputError("MCSFrontMismatch", "MCS was built for a different front");
        for (const auto& h : j.at("handleslides")) {
            const auto& s = h.at("strands");
            hs.push_back({h.at("slot").get<int>(), h.value("rank", 0), s.at(0).get<int>(), s.at(1).get<int>()});
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError("MCSParseError", ex.what());
    }
    return derive_complexes(std::move(diagram), std::move(hs));
}

nlohmann::json to_json(const MoveTrace& trace)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : trace) {
        nlohmann::json step = {{"move", s.move}, {"slot", s.slot}, {"args", s.args}};
        if (!s.variant.empty())
            step["variant"] = s.variant;
        out.push_back(step);
    }
    return out;
}

MoveTrace trace_from_json(const nlohmann::json& j)
{
    MoveTrace out;
    try {
        for (const auto& s : j)
            out.push_back({s.at("move").get<int>(), s.value("variant", std::string()), s.at("slot").get<int>(),
                           s.at("args").get<std::vector<int>>()});
    } catch (const nlohmann::json::exception& ex) {
        throw InputError("TraceParseError", ex.what());
    }
    return out;
}

std::string describe(const MoveStep& step)
{
    std::string out = "(" + std::to_string(step.move) + ")";
    if (!step.variant.empty())
        out += " " + step.variant;
    out += " slot " + std::to_string(step.slot);
    if (!step.args.empty()) {
        out += " [";
        for (std::size_t i = 0; i < step.args.size(); ++i)
            out += (i ? "," : "") + std::to_string(step.args[i]);
        out += "]";
    }
    return out;
}

}  // namespace legmcs
