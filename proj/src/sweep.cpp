#include <algorithm>
#include <tuple>

#include "legmcs/disks.hpp"
#include "legmcs/errors.hpp"
#include "legmcs/mcs.hpp"

namespace legmcs {

namespace {

bool canonical_before(const Handleslide& a, const Handleslide& b)
{
    return std::tuple(a.k, -a.l) < std::tuple(b.k, -b.l);
}

class Sweeper {
public:
    Sweeper(const MCS& c, const Differential& d, const Augmentation& eps, const Augmentation& epsPrime,
            const HomotopyCertificate& cert, const SweepOptions& options)
        : cur_(c), dg_(c.diagram()), d_(d), eps_(eps), epsPrime_(epsPrime), cert_(cert), options_(options),
          genOf_(dg_.event_count(), -1)
    {
        for (const auto& g : d.generators)
            genOf_[g.eventIndex] = g.id;
        if (options_.checkInvariant)
            tables_ = epsH_half_disk_tables(dg_, eps_, epsPrime_, cert_);
    }

    MoveTrace run()
    {
        for (int e = 0; e < dg_.event_count(); ++e) {
            const auto& ev = dg_.events()[e];
            if (ev.kind == EventKind::LeftCusp)
                push_all(e);
            else if (ev.kind == EventKind::RightCusp)
                right_cusp(e);
            else
                crossing(e);
            if (e + 1 < dg_.event_count()) {
                order_slot(e + 1);
                if (options_.checkInvariant)
                    check_invariant(e + 1);
            }
        }
        return std::move(trace_);
    }

    const MCS& result() const { return cur_; }
    const SweepStats& stats() const { return stats_; }

private:
    void apply(MoveStep step)
    {
        cur_ = apply_move(cur_, step);
        trace_.push_back(std::move(step));
    }

    Handleslide item(int slot, int rank) const { return cur_.slot_contents(slot).at(rank); }

    // C's own mark for the crossing at event `slot` is still the last item there.
    int protected_tail(int slot) const
    {
        if (slot >= dg_.event_count() || dg_.events()[slot].kind != EventKind::Crossing)
            return 0;
        return eps_(genOf_[slot]);
    }

    void push_right(int e)
    {
        const Handleslide h = item(e, cur_.slot_size(e) - 1);
        const int id = passage_move_id(dg_, e, h, true);
        if (id == 0)
            throw PropertyViolation("SweepStuck", "handleslide (" + std::to_string(h.k) + "," + std::to_string(h.l) +
                                                      ") cannot cross event " + std::to_string(e));
        apply({id, "right", e, {h.k, h.l}});
    }

    void push_all(int e)
    {
        while (cur_.slot_size(e) > 0)
            push_right(e);
    }

    // Interchange ranks r and r+1; both must commute.
    void commute(int slot, int r)
    {
        const int id = interchange_move_id(item(slot, r), item(slot, r + 1));
        if (id == 0 || id == 4)
            throw PropertyViolation("SweepChain", "handleslides at slot " + std::to_string(slot) + " rank " +
                                                      std::to_string(r) + " do not commute");
        apply({id, "", slot, {r}});
    }

    // Sort V into canonical order, cancelling equal neighbours.
    void order_slot(int slot)
    {
        for (bool changed = true; changed;) {
            changed = false;
            const int n = cur_.slot_size(slot) - protected_tail(slot);
            const auto items = cur_.slot_contents(slot);
            for (int r = 0; r + 1 < n; ++r) {
                if (items[r].same_strands(items[r + 1])) {
                    apply({1, "", slot, {r}});
                    changed = true;
                    break;
                }
                if (canonical_before(items[r + 1], items[r])) {
                    commute(slot, r);
                    changed = true;
                    break;
                }
            }
        }
    }

    void check_invariant(int slot)
    {
        const int s = dg_.strands(slot);
        std::vector<std::vector<std::uint8_t>> v(s + 2, std::vector<std::uint8_t>(s + 2, 0));
        const auto items = cur_.slot_contents(slot);
        const int n = static_cast<int>(items.size()) - protected_tail(slot);
        for (int r = 0; r < n; ++r)
            v[items[r].k][items[r].l] ^= 1;
        ++stats_.invariantChecks;
        for (int i = 1; i <= s; ++i)
            for (int j = i + 1; j <= s; ++j)
                if (v[i][j] != tables_[slot][i][j]) {
                    ++stats_.invariantViolations;
                    throw PropertyViolation("SweepInvariantViolation", "v(" + std::to_string(i) + "," + std::to_string(j) +
                                                                      ") at slot " + std::to_string(slot) +
                                                                      " disagrees with the half-disk count");
                }
    }

    void crossing(int e)
    {
        const int k = dg_.events()[e].position;
        const int q = genOf_[e];
        const int degree = d_.generators[q].degree;
        if (degree == 0) {
            degree_zero(e, k, q);
        } else if (degree == -1 && cert_.h[q]) {
            while (cur_.slot_size(e) > 0 && item(e, cur_.slot_size(e) - 1).k >= k)
                push_right(e);
            const int size = cur_.slot_size(e);
            if (!move13_collection(cur_, e, size, k, k + 1).empty())
                apply({13, "insert", e, {size, k, k + 1}});
            push_all(e);
        } else {
            push_all(e);
        }
    }

    void degree_zero(int e, int k, int q)
    {
        const Handleslide mark{e, 0, k, k + 1};
        for (;;) {
            auto items = cur_.slot_contents(e);
            int r = static_cast<int>(items.size()) - 1;
            while (r >= 0 && items[r].same_strands(mark))
                --r;
            if (r < 0)
                break;
            for (; r + 1 < cur_.slot_size(e); ++r) {
                const int id = interchange_move_id(item(e, r), item(e, r + 1));
                apply({id, "", e, {r}});
            }
            push_right(e);
        }
        while (cur_.slot_size(e) >= 2)
            apply({1, "", e, {0}});
        if (cur_.slot_size(e) != epsPrime_(q))
            throw PropertyViolation("SweepMarkMismatch", "crossing " + generator_name(d_, q) +
                                                             " keeps the wrong mark after the sweep");
        if (eps_(q) != epsPrime_(q)) {
            ++stats_.markFlips;
            stats_.flipCrossings.push_back(q);
        }
    }

    // Move the handleslide at rank `from` left to rank `to`.
    void slide_left(int slot, int from, int to)
    {
        for (int r = from; r > to; --r)
            commute(slot, r - 1);
    }

    void right_cusp(int e)
    {
        const int k = dg_.events()[e].position;
        while (cur_.slot_size(e) > 0) {
            const int size = cur_.slot_size(e);
            const Handleslide h = item(e, size - 1);
            if (h.l < k || h.k > k + 1 || (h.k < k && h.l > k + 1)) {
                push_right(e);
            } else if (h.k == k + 1 || h.l == k) {
                apply({10, "remove", e, {h.k, h.l}});
            } else {
                // (k, j) pairs with (k+1, j); (i, k+1) pairs with (i, k).
                const Handleslide target = h.k == k ? Handleslide{e, 0, k + 1, h.l} : Handleslide{e, 0, h.k, k};
                apply({13, "insert", e, {size, target.k, target.l}});
                const auto items = cur_.slot_contents(e);
                int p = size;
                while (p < static_cast<int>(items.size()) && !items[p].same_strands(h))
                    ++p;
                if (p == static_cast<int>(items.size()))
                    throw PropertyViolation("SweepStuck", "move 13 did not produce the cancelling handleslide");
                slide_left(e, p, size);
                apply({1, "", e, {size - 1}});
            }
        }
    }

    MCS cur_;
    const FrontDiagram& dg_;
    const Differential& d_;
    const Augmentation& eps_;
    const Augmentation& epsPrime_;
    const HomotopyCertificate& cert_;
    SweepOptions options_;
    SweepStats stats_;
    std::vector<int> genOf_;
    SlotTables tables_;
    MoveTrace trace_;
};

}  // namespace

MoveTrace sweep_equivalence(const MCS& c, const MCS& cPrime, const Differential& d, const HomotopyCertificate& cert,
                            const SweepOptions& options, SweepStats* stats)
{
    const Augmentation eps = augmentation_of(c, d);
    const Augmentation epsPrime = augmentation_of(cPrime, d);
    if (!verify_certificate(d, eps, epsPrime, cert))
        throw InvalidArgument("certificate does not witness a homotopy between the two augmentations");

    Sweeper sweeper(c, d, eps, epsPrime, cert, options);
    MoveTrace trace;
    try {
        trace = sweeper.run();
    } catch (...) {
        if (stats)
            *stats = sweeper.stats();
        throw;
    }
    if (stats)
        *stats = sweeper.stats();
    if (!(sweeper.result() == cPrime))
        throw PropertyViolation("SweepEndMismatch", "sweep did not end at the target MCS");
    if (options.checkReplay && !(replay(c, trace) == cPrime))
        throw PropertyViolation("ReplayMismatch", "replaying the trace does not reach the target MCS");
    return trace;
}

std::optional<MoveTrace> are_equivalent(const MCS& c, const MCS& cPrime, const Differential& d,
                                        const SweepOptions& options)
{
    const Augmentation eps = augmentation_of(c, d);
    const Augmentation epsPrime = augmentation_of(cPrime, d);
    auto cert = solve_homotopy(eps, epsPrime, d);
    if (!cert)
        return std::nullopt;
    return sweep_equivalence(c, cPrime, d, *cert, options);
}

}  // namespace legmcs
