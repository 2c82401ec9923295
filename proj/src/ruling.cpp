#include <map>

#include "legmcs/errors.hpp"
#include "legmcs/mcs.hpp"

namespace legmcs {

namespace {

[[noreturn]] void violation(const std::string& axiom, const std::string& what)
{
    throw PropertyViolation("RulingAxiomViolation", axiom + ": " + what);
}

// Pivot pairing: each row is reduced by the already reduced rows below it
// until its leftmost entry is unclaimed.
std::vector<int> pivot_pairing(const TriangularComplex& t)
{
    const int s = t.size;
    std::vector<int> partner(s + 1, 0);
    std::vector<std::vector<std::uint8_t>> reduced(s + 1);
    std::vector<int> ownerOf(s + 1, 0);
    for (int i = s; i >= 1; --i) {
        auto row = t.c[i];
        for (;;) {
            int p = i + 1;
            while (p <= s && !row[p])
                ++p;
            if (p > s)
                break;
            if (!ownerOf[p]) {
                ownerOf[p] = i;
                if (partner[p] || partner[i])
                    violation("matching", "strand paired twice");
                partner[i] = p;
                partner[p] = i;
                break;
            }
            const auto& other = reduced[ownerOf[p]];
            for (int j = 1; j <= s; ++j)
                row[j] ^= other[j];
        }
        reduced[i] = std::move(row);
    }
    return partner;
}

std::string slot_name(int slot) { return "slot " + std::to_string(slot); }

}  // namespace

std::string NormalRuling::fingerprint() const
{
    std::string out = "switches:";
    if (switches.empty())
        return out + "none";
    for (std::size_t i = 0; i < switches.size(); ++i)
        out += (i ? "," : "") + std::to_string(switches[i]);
    return out;
}

NormalRuling ruling_from_mcs(const MCS& mcs)
{
    const FrontDiagram& d = mcs.diagram();
    const auto& cx = mcs.complexes();
    NormalRuling r;
    r.partner.push_back({0});
    for (int slot = 1; slot < d.slot_count(); ++slot) {
        const int begin = mcs.event_item_index(slot - 1) + 1;
        const int end = begin + (slot < d.event_count() ? mcs.slot_size(slot) : 0);
        auto p = pivot_pairing(cx[begin]);
        for (int t = begin + 1; t <= end; ++t)
            if (pivot_pairing(cx[t]) != p)
                violation("constancy", "pairing changes inside " + slot_name(slot));
        r.partner.push_back(std::move(p));
    }
    for (int e = 0; e < d.event_count(); ++e)
        if (d.events()[e].kind == EventKind::Crossing && r.partner[e] == r.partner[e + 1])
            r.switches.push_back(e);
    validate_ruling(d, r);
    return r;
}

void validate_ruling(const FrontDiagram& d, const NormalRuling& ruling)
{
    if (static_cast<int>(ruling.partner.size()) != d.slot_count())
        violation("shape", "one pairing per slot expected");
    for (int slot = 0; slot < d.slot_count(); ++slot) {
        const auto& p = ruling.partner[slot];
        const int s = d.strands(slot);
        if (static_cast<int>(p.size()) != s + 1)
            violation("shape", "pairing size at " + slot_name(slot));
        for (int i = 1; i <= s; ++i) {
            const int j = p[i];
            if (j < 1 || j > s || j == i || p[j] != i)
                violation("matching", "strand " + std::to_string(i) + " is not matched at " + slot_name(slot));
            if (i < j && d.maslov(slot, i) != d.maslov(slot, j) + 1)
                violation("grading", "pair (" + std::to_string(i) + "," + std::to_string(j) + ") at " +
                                         slot_name(slot) + " does not differ by one in Maslov potential");
        }
    }

    std::map<int, bool> switched;
    for (int e : ruling.switches)
        switched[e] = true;
    for (int e = 0; e < d.event_count(); ++e) {
        const auto& ev = d.events()[e];
        const int k = ev.position;
        const auto& before = ruling.partner[e];
        const auto& after = ruling.partner[e + 1];
        switch (ev.kind) {
        case EventKind::LeftCusp: {
            auto tau = [k](int i) { return i < k ? i : i + 2; };
            if (after[k] != k + 1)
                violation("cusp", "left cusp strands unpaired at event " + std::to_string(e));
            for (int i = 1; i < static_cast<int>(before.size()); ++i)
                if (after[tau(i)] != tau(before[i]))
                    violation("cusp", "pairing changes at left cusp event " + std::to_string(e));
            break;
        }
        case EventKind::RightCusp: {
            auto pi = [k](int i) { return i < k ? i : i + 2; };
            if (before[k] != k + 1)
                violation("cusp", "right cusp strands unpaired at event " + std::to_string(e));
            for (int i = 1; i < static_cast<int>(after.size()); ++i)
                if (pi(after[i]) != before[pi(i)])
                    violation("cusp", "pairing changes at right cusp event " + std::to_string(e));
            break;
        }
        case EventKind::Crossing: {
            auto sigma = [k](int i) { return i == k ? k + 1 : i == k + 1 ? k : i; };
            bool pass = true;
            for (int i = 1; i < static_cast<int>(before.size()); ++i)
                if (after[sigma(i)] != sigma(before[i]))
                    pass = false;
            if (switched.count(e)) {
                if (after != before)
                    violation("switch", "pairing changes at switched crossing event " + std::to_string(e));
                const int a = before[k], b = before[k + 1];
                if (a == k + 1)
                    violation("switch", "crossing strands are paired together at event " + std::to_string(e));
                if (d.maslov(e, k) != d.maslov(e, k + 1))
                    violation("switch", "switch at a crossing of nonzero degree, event " + std::to_string(e));
                const bool normal = (a < k && b > k + 1) || (b < a && a < k) || (k + 1 < b && b < a);
                if (!normal)
                    violation("normality", "interlaced switch at event " + std::to_string(e));
            } else if (!pass) {
                violation("crossing", "pairing neither passes nor switches at event " + std::to_string(e));
            }
            break;
        }
        }
    }
}

}  // namespace legmcs
