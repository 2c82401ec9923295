#include <algorithm>

#include "legmcs/errors.hpp"
#include "legmcs/mcs.hpp"

namespace legmcs {

namespace {

using List = std::vector<Handleslide>;

[[noreturn]] void forbidden(const MoveStep& step, const std::string& why)
{
    throw InputError("ForbiddenMove", describe(step) + ": " + why);
}

[[noreturn]] void absent(const MoveStep& step, const std::string& why)
{
    throw InputError("PatternMismatch", describe(step) + ": " + why);
}

int slot_begin(const List& hs, int slot)
{
    return static_cast<int>(std::count_if(hs.begin(), hs.end(), [slot](const Handleslide& h) { return h.slot < slot; }));
}

void rerank(List& hs)
{
    for (std::size_t n = 0; n < hs.size(); ++n)
        hs[n].rank = (n > 0 && hs[n - 1].slot == hs[n].slot) ? hs[n - 1].rank + 1 : 0;
}

void need_args(const MoveStep& step, std::size_t n)
{
    if (step.args.size() != n)
        absent(step, "expected " + std::to_string(n) + " arguments");
}

}  // namespace

int interchange_move_id(const Handleslide& h1, const Handleslide& h2)
{
    if (h1.same_strands(h2))
        return 0;
    if (h1.l == h2.k || h2.l == h1.k)
        return 4;
    if (h1.k == h2.k)
        return 3;
    if (h1.l == h2.l)
        return 5;
    if (h1.l < h2.k || h2.l < h1.k)
        return 2;
    return 6;
}

namespace {

Handleslide composite(const Handleslide& h1, const Handleslide& h2)
{
    return {h1.slot, 0, std::min(h1.k, h2.k), std::max(h1.l, h2.l)};
}

// Complexes outside the changed window [first, first + m) must agree.
void check_local(const MCS& before, const MCS& after, int first, int mOld, int mNew, const MoveStep& step)
{
    const auto& a = before.complexes();
    const auto& b = after.complexes();
    for (int t = 0; t <= first; ++t)
        if (a[t] != b[t])
            throw PropertyViolation("MoveNotLocal", describe(step) + " changed the complex at position " + std::to_string(t));
    const int tail = static_cast<int>(a.size()) - 1 - first - mOld;
    if (static_cast<int>(b.size()) - 1 - first - mNew != tail)
        throw PropertyViolation("MoveNotLocal", describe(step) + " changed the timeline length unexpectedly");
    for (int u = 0; u <= tail; ++u)
        if (a[a.size() - 1 - u] != b[b.size() - 1 - u])
            throw PropertyViolation("MoveNotLocal",
                                    describe(step) + " changed the complex at position " + std::to_string(a.size() - 1 - u));
}

// Strand labels on the far side of event e.
Handleslide carry(const FrontDiagram& d, int e, const Handleslide& h, bool rightward, int toSlot)
{
    const auto& ev = d.events()[e];
    const int p = ev.position;
    if (ev.kind == EventKind::Crossing) {
        auto sigma = [p](int i) { return i == p ? p + 1 : i == p + 1 ? p : i; };
        return {toSlot, 0, sigma(h.k), sigma(h.l)};
    }
    const bool removes = (ev.kind == EventKind::RightCusp) == rightward;
    auto shift = [&](int i) { return removes ? (i < p ? i : i - 2) : (i < p ? i : i + 2); };
    return {toSlot, 0, shift(h.k), shift(h.l)};
}

}  // namespace

int passage_move_id(const FrontDiagram& d, int event, const Handleslide& h, bool rightward)
{
    const auto& ev = d.events().at(event);
    const int p = ev.position;
    const bool kOn = h.k == p || h.k == p + 1;
    const bool lOn = h.l == p || h.l == p + 1;
    if (ev.kind == EventKind::Crossing) {
        if (kOn && lOn)
            return 0;
        if (!kOn && !lOn)
            return 7;
        return lOn ? 8 : 9;
    }
    // Going right over a right cusp or left over a left cusp, the strands p
    // and p+1 end; the other way they begin.
    const bool removes = (ev.kind == EventKind::RightCusp) == rightward;
    if (removes) {
        if (kOn || lOn)
            return 0;
        return (h.k < p && h.l > p + 1) ? 11 : 12;
    }
    return (h.k < p && h.l >= p) ? 11 : 12;
}

std::vector<Handleslide> move13_collection(const MCS& mcs, int slot, int rank, int k, int l)
{
    const auto& t = mcs.complex_at(slot, rank);
    if (k < 1 || l <= k || l > t.size)
        throw InputError("PatternMismatch", "move 13 needs strands 1 <= k < l <= " + std::to_string(t.size));
    if (t.mu[k] != t.mu[l] - 1)
        throw InputError("PatternMismatch", "move 13 needs mu(k) = mu(l) - 1");
    std::vector<Handleslide> out;
    for (int i = 1; i < k; ++i)
        if (t.c[i][k])
            out.push_back({slot, 0, i, l});
    for (int j = t.size; j > l; --j)
        if (t.c[l][j])
            out.push_back({slot, 0, k, j});
    return out;
}

MCS apply_move(const MCS& mcs, const MoveStep& step)
{
    const FrontDiagram& d = mcs.diagram();
    const int slot = step.slot;
    if (slot < 1 || slot >= d.slot_count() - 1)
        absent(step, "slot out of range");
    List hs = mcs.handleslides();
    const int begin = slot_begin(hs, slot);
    const int size = mcs.slot_size(slot);
    auto at = [&](int rank) -> Handleslide& {
        if (rank < 0 || rank >= size)
            absent(step, "no handleslide at rank " + std::to_string(rank));
        return hs[begin + rank];
    };

    int first = 0, mOld = 0, mNew = 0;

    switch (step.move) {
    case 1: {
        if (step.variant.empty()) {
            need_args(step, 1);
            const int r = step.args[0];
            if (!at(r).same_strands(at(r + 1)))
                absent(step, "handleslides differ");
            hs.erase(hs.begin() + begin + r, hs.begin() + begin + r + 2);
            first = mcs.item_index(slot, r);
            mOld = 2;
        } else if (step.variant == "insert") {
            need_args(step, 3);
            const int r = step.args[0];
            if (r < 0 || r > size)
                absent(step, "rank out of range");
            Handleslide h{slot, 0, step.args[1], step.args[2]};
            hs.insert(hs.begin() + begin + r, {h, h});
            first = mcs.item_index(slot, r);
            mNew = 2;
        } else {
            absent(step, "unknown variant");
        }
        break;
    }
    case 2:
    case 3:
    case 4:
    case 5:
    case 6: {
        need_args(step, 1);
        const int r = step.args[0];
        if (step.variant.empty()) {
            Handleslide h1 = at(r), h2 = at(r + 1);
            const int id = interchange_move_id(h1, h2);
            if (id != step.move)
                absent(step, "endpoint pattern is move " + std::to_string(id));
            hs[begin + r] = h2;
            hs[begin + r + 1] = h1;
            mOld = mNew = 2;
            if (id == 4) {
                hs.insert(hs.begin() + begin + r + 2, composite(h1, h2));
                mNew = 3;
            }
        } else if (step.variant == "absorb" && step.move == 4) {
            Handleslide x = at(r), y = at(r + 1), z = at(r + 2);
            if (interchange_move_id(x, y) != 4 || !z.same_strands(composite(x, y)))
                absent(step, "no chained pair followed by its composite");
            hs[begin + r] = y;
            hs[begin + r + 1] = x;
            hs.erase(hs.begin() + begin + r + 2);
            mOld = 3;
            mNew = 2;
        } else {
            absent(step, "unknown variant");
        }
        first = mcs.item_index(slot, r);
        break;
    }
    case 7:
    case 8:
    case 9:
    case 11:
    case 12: {
        need_args(step, 2);
        const bool right = step.variant == "right";
        if (!right && step.variant != "left")
            absent(step, "variant must be right or left");
        if (size == 0)
            absent(step, "slot is empty");
        const int rank = right ? size - 1 : 0;
        const Handleslide h = at(rank);
        if (h.k != step.args[0] || h.l != step.args[1])
            absent(step, "handleslide at the slot end is (" + std::to_string(h.k) + "," + std::to_string(h.l) + ")");
        const int e = right ? slot : slot - 1;
        const int toSlot = right ? slot + 1 : slot - 1;
        if (toSlot < 1 || toSlot >= d.slot_count() - 1)
            absent(step, "no slot on the far side");
        const int id = passage_move_id(d, e, h, right);
        if (id == 0)
            forbidden(step, "the handleslide ends on a strand of the event");
        const Handleslide moved = carry(d, e, h, right, toSlot);
        if (id != step.move)
            absent(step, "pattern is move " + std::to_string(id));
        hs.erase(hs.begin() + begin + rank);
        if (right) {
            hs.insert(hs.begin() + slot_begin(hs, toSlot), moved);
            first = mcs.item_index(slot, rank);
        } else {
            hs.insert(hs.begin() + slot_begin(hs, toSlot + 1), moved);
            first = mcs.event_item_index(e);
        }
        mOld = mNew = 2;
        break;
    }
    case 10: {
        if (step.variant == "reflected")
            forbidden(step, "the reflected form needs a non-simple left cusp");
        need_args(step, 2);
        const auto& ev = d.events()[slot];
        if (ev.kind != EventKind::RightCusp)
            absent(step, "event " + std::to_string(slot) + " is not a right cusp");
        const int p = ev.position;
        Handleslide h{slot, 0, step.args[0], step.args[1]};
        const bool lowerStrand = h.k == p + 1 && h.l > p + 1;
        const bool upperStrand = h.l == p && h.k < p;
        if (!lowerStrand && !upperStrand)
            absent(step, "handleslide does not end on exactly one cusp strand");
        if (step.variant == "remove") {
            if (size == 0 || !at(size - 1).same_strands(h))
                absent(step, "last handleslide of the slot differs");
            first = mcs.item_index(slot, size - 1);
            hs.erase(hs.begin() + begin + size - 1);
            mOld = 2;
            mNew = 1;
        } else if (step.variant == "insert") {
            first = mcs.item_index(slot, size);
            hs.insert(hs.begin() + begin + size, h);
            mOld = 1;
            mNew = 2;
        } else {
            absent(step, "unknown variant");
        }
        break;
    }
    case 13: {
        need_args(step, 3);
        const int r = step.args[0];
        if (r < 0 || r > size)
            absent(step, "rank out of range");
        auto collection = move13_collection(mcs, slot, r, step.args[1], step.args[2]);
        const int n = static_cast<int>(collection.size());
        first = mcs.item_index(slot, r);
        if (step.variant == "insert") {
            hs.insert(hs.begin() + begin + r, collection.begin(), collection.end());
            mNew = n;
        } else if (step.variant == "remove") {
            if (r + n > size)
                absent(step, "slot is too short");
            for (int m = 0; m < n; ++m)
                if (!hs[begin + r + m].same_strands(collection[m]))
                    absent(step, "handleslides do not form the collection");
            hs.erase(hs.begin() + begin + r, hs.begin() + begin + r + n);
            mOld = n;
        } else {
            absent(step, "unknown variant");
        }
        break;
    }
    default:
        absent(step, "unknown move");
    }

    rerank(hs);
    MCS out = derive_complexes(mcs.diagram_ptr(), std::move(hs));
    check_local(mcs, out, first, mOld, mNew, step);
    return out;
}

MCS replay(const MCS& start, const MoveTrace& trace)
{
    MCS cur = start;
    for (const auto& step : trace)
        cur = apply_move(cur, step);
    return cur;
}

}  // namespace legmcs
