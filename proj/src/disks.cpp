#include "legmcs/disks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "legmcs/errors.hpp"

namespace legmcs {

namespace {

struct Piece {
    Word word;
    std::vector<DiskCorner> corners;
    std::vector<DiskSegment> segments;
    int minusOnes = 0;  // corners at degree -1 crossings
};

// Right-to-left search. pieces(slot, a, b) lists the disks lying left of the
// slot whose right edge is the vertical segment from level a down to level b.
class Enumerator {
public:
    using Allowed = std::function<bool(int generator)>;

    Enumerator(const FrontDiagram& diagram, Allowed allowed, std::function<CornerRole(int)> role, bool cuspCorners,
               int maxMinusOnes, std::uint64_t budget)
        : d_(diagram), allowed_(std::move(allowed)), role_(std::move(role)), cuspCorners_(cuspCorners),
          maxMinusOnes_(maxMinusOnes), budget_(budget)
    {
        genOfEvent_.assign(diagram.event_count(), -1);
        for (const auto& g : grade_generators(diagram)) {
            genOfEvent_[g.eventIndex] = g.id;
            degree_.push_back(g.degree);
        }
    }

    const std::vector<Piece>& pieces(int slot, int a, int b)
    {
        auto key = std::make_tuple(slot, a, b);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::vector<Piece> out = build(slot, a, b);
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    void charge()
    {
        if (++used_ > budget_)
            throw BudgetExceeded("DiskBudgetExceeded",
                                 "front disk search exceeded the budget of " + std::to_string(budget_) + " states");
    }

    std::vector<Piece> build(int slot, int a, int b)
    {
        std::vector<Piece> out;
        if (slot == 0)
            return out;
        const int e = slot - 1;
        const auto& ev = d_.events()[e];
        const int k = ev.position;
        const DiskSegment here{slot, a, b};

        auto extend = [&](const Piece& sub, bool upperCorner, bool lowerCorner, int g) {
            charge();
            Piece p;
            int extra = (upperCorner + lowerCorner) * (degree_[g] == -1 ? 1 : 0);
            if (sub.minusOnes + extra > maxMinusOnes_)
                return;
            p.minusOnes = sub.minusOnes + extra;
            if (upperCorner) {
                p.word.push_back(g);
                p.corners.push_back({g, e, true, role_(g)});
            }
            p.word.insert(p.word.end(), sub.word.begin(), sub.word.end());
            p.corners.insert(p.corners.end(), sub.corners.begin(), sub.corners.end());
            if (lowerCorner) {
                p.word.push_back(g);
                p.corners.push_back({g, e, false, role_(g)});
            }
            p.segments = sub.segments;
            p.segments.push_back(here);
            out.push_back(std::move(p));
        };

        switch (ev.kind) {
        case EventKind::LeftCusp: {
            bool ak = a == k || a == k + 1;
            bool bk = b == k || b == k + 1;
            if (ak && bk) {
                charge();
                Piece p;
                p.segments.push_back(here);
                out.push_back(std::move(p));
            } else if (!ak && !bk) {
                int a2 = a < k ? a : a - 2;
                int b2 = b < k ? b : b - 2;
                for (const auto& sub : pieces(slot - 1, a2, b2))
                    extend(sub, false, false, 0);
            }
            break;
        }
        case EventKind::Crossing: {
            const int g = genOfEvent_[e];
            // (left level, corner?) options for each thread.
            std::vector<std::pair<int, bool>> up, low;
            if (a == k + 1) {
                up.push_back({k, false});
                if (allowed_(g))
                    up.push_back({k + 1, true});
            } else if (a == k) {
                up.push_back({k + 1, false});
            } else {
                up.push_back({a, false});
            }
            if (b == k) {
                low.push_back({k + 1, false});
                if (allowed_(g))
                    low.push_back({k, true});
            } else if (b == k + 1) {
                low.push_back({k, false});
            } else {
                low.push_back({b, false});
            }
            for (auto [a2, uc] : up)
                for (auto [b2, lc] : low) {
                    if (a2 >= b2)
                        continue;
                    for (const auto& sub : pieces(slot - 1, a2, b2))
                        extend(sub, uc, lc, g);
                }
            break;
        }
        case EventKind::RightCusp: {
            const int c = genOfEvent_[e];
            auto pi = [k](int i) { return i < k ? i : i + 2; };
            for (const auto& sub : pieces(slot - 1, pi(a), pi(b)))
                extend(sub, false, false, c);
            if (a < k && b >= k) {
                // The boundary folds around the cusp point: an upper piece
                // ending on the lower cusp strand and a lower piece starting
                // on the upper cusp strand.
                std::vector<Piece> upper, lower;
                for (const auto& p : pieces(slot - 1, pi(a), k + 1))
                    upper.push_back(p);
                if (cuspCorners_ && allowed_(c))
                    for (auto p : pieces(slot - 1, pi(a), k)) {
                        p.word.push_back(c);
                        p.corners.push_back({c, e, false, CornerRole::Cusp});
                        upper.push_back(std::move(p));
                    }
                for (const auto& p : pieces(slot - 1, k, pi(b)))
                    lower.push_back(p);
                if (cuspCorners_ && allowed_(c))
                    for (auto p : pieces(slot - 1, k + 1, pi(b))) {
                        p.word.insert(p.word.begin(), c);
                        p.corners.insert(p.corners.begin(), {c, e, true, CornerRole::Cusp});
                        lower.push_back(std::move(p));
                    }
                for (const auto& u : upper)
                    for (const auto& l : lower) {
                        charge();
                        if (u.minusOnes + l.minusOnes > maxMinusOnes_)
                            continue;
                        Piece p;
                        p.minusOnes = u.minusOnes + l.minusOnes;
                        p.word = concat(u.word, l.word);
                        p.corners = u.corners;
                        p.corners.insert(p.corners.end(), l.corners.begin(), l.corners.end());
                        p.segments = u.segments;
                        p.segments.insert(p.segments.end(), l.segments.begin(), l.segments.end());
                        p.segments.push_back(here);
                        out.push_back(std::move(p));
                    }
            }
            break;
        }
        }
        return out;
    }

    const FrontDiagram& d_;
    Allowed allowed_;
    std::function<CornerRole(int)> role_;
    bool cuspCorners_;
    int maxMinusOnes_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    std::vector<int> genOfEvent_;
    std::vector<int> degree_;
    std::map<std::tuple<int, int, int>, std::vector<Piece>> memo_;
};

// Exactly one H corner; eps before it and eps' after it.
bool epsH_word(const Word& w, const Augmentation& eps, const Augmentation& epsPrime, const HomotopyCertificate& cert)
{
    int hPos = -1;
    for (std::size_t t = 0; t < w.size(); ++t)
        if (cert.h[w[t]]) {
            if (hPos >= 0)
                return false;
            hPos = static_cast<int>(t);
        }
    if (hPos < 0)
        return false;
    for (int t = 0; t < hPos; ++t)
        if (!eps.values[w[t]])
            return false;
    for (std::size_t t = hPos + 1; t < w.size(); ++t)
        if (!epsPrime.values[w[t]])
            return false;
    return true;
}

const Generator& generator_at(const std::vector<Generator>& gens, int id)
{
    if (id < 0 || id >= static_cast<int>(gens.size()))
        throw InvalidArgument("generator " + std::to_string(id) + " does not exist");
    return gens[id];
}

}  // namespace

std::vector<DiskBoundary> enumerate_front_disks(const FrontDiagram& diagram, const DiskQuery& query,
                                                std::uint64_t budget)
{
    const auto gens = grade_generators(diagram);
    const bool admissible = query.kind == DiskClass::ZeroMinusOne || query.kind == DiskClass::EpsHAdmissible;
    const bool withH = query.kind == DiskClass::EpsHAdmissible || query.kind == DiskClass::EpsHHalf;
    if (withH && (!query.eps || !query.epsPrime || !query.cert))
        throw InvalidArgument("this disk class needs eps, eps' and a homotopy certificate");
    if (query.kind == DiskClass::EpsHalf && !query.eps)
        throw InvalidArgument("eps-half-disks need an augmentation");

    int slot = query.slot, i = query.i, j = query.j;
    if (admissible) {
        const auto& g = generator_at(gens, query.originGenerator);
        if (g.kind != GeneratorKind::Crossing || g.degree != 0)
            throw InvalidArgument("admissible disks originate at a degree-0 crossing");
        slot = g.eventIndex;
        i = g.position;
        j = g.position + 1;
    } else if (slot < 0 || slot >= diagram.slot_count() || i < 1 || j <= i || j > diagram.strands(slot)) {
        throw InvalidArgument("vertical segment [" + std::to_string(i) + "," + std::to_string(j) + "] at slot " +
                              std::to_string(slot) + " is out of range");
    }

    Enumerator::Allowed allowed;
    std::function<CornerRole(int)> role = [](int) { return CornerRole::Plain; };
    int maxMinusOnes = 1 << 20;
    switch (query.kind) {
    case DiskClass::ZeroMinusOne:
        allowed = [&](int g) { return gens[g].kind == GeneratorKind::Crossing && (gens[g].degree == 0 || gens[g].degree == -1); };
        maxMinusOnes = 1;
        break;
    case DiskClass::EpsHalf:
        allowed = [&](int g) { return query.eps->values[g] != 0; };
        role = [](int) { return CornerRole::Eps; };
        break;
    case DiskClass::EpsHAdmissible:
    case DiskClass::EpsHHalf:
        allowed = [&](int g) { return query.eps->values[g] || query.epsPrime->values[g] || query.cert->h[g]; };
        role = [&](int g) {
            return query.cert->h[g] ? CornerRole::Homotopy : CornerRole::Plain;
        };
        maxMinusOnes = 1;
        break;
    }

    Enumerator en(diagram, allowed, role, query.cuspCorners, maxMinusOnes, budget);
    std::vector<DiskBoundary> out;
    for (const auto& p : en.pieces(slot, i, j)) {
        bool keep = false;
        switch (query.kind) {
        case DiskClass::ZeroMinusOne: keep = p.minusOnes == 1; break;
        case DiskClass::EpsHalf: keep = true; break;
        case DiskClass::EpsHAdmissible:
        case DiskClass::EpsHHalf: keep = epsH_word(p.word, *query.eps, *query.epsPrime, *query.cert); break;
        }
        if (!keep)
            continue;
        DiskBoundary disk;
        disk.originGenerator = admissible ? query.originGenerator : -1;
        disk.originSlot = slot;
        disk.i = i;
        disk.j = j;
        disk.word = p.word;
        disk.corners = p.corners;
        if (withH) {
            // Roles follow the position relative to the H corner.
            bool seenH = false;
            for (auto& c : disk.corners) {
                if (c.role == CornerRole::Homotopy) {
                    seenH = true;
                    continue;
                }
                c.role = seenH ? CornerRole::EpsPrime : CornerRole::Eps;
            }
        }
        disk.segments = p.segments;
        std::sort(disk.segments.begin(), disk.segments.end());
        out.push_back(std::move(disk));
    }
    std::sort(out.begin(), out.end(), [](const DiskBoundary& x, const DiskBoundary& y) {
        return std::tie(x.word, x.corners, x.segments) < std::tie(y.word, y.corners, y.segments);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DiskBoundary& x, const DiskBoundary& y) {
                              return std::tie(x.word, x.corners, x.segments) ==
                                     std::tie(y.word, y.corners, y.segments);
                          }),
              out.end());
    return out;
}

Differential front_differential(const FrontDiagram& diagram, std::uint64_t budget)
{
    Differential d;
    d.front = diagram.word();
    d.generators = grade_generators(diagram);
    d.terms.resize(d.generators.size());
    Enumerator en(
        diagram, [](int) { return true; }, [](int) { return CornerRole::Plain; }, true, 1 << 20, budget);
    for (const auto& g : d.generators) {
        for (const auto& p : en.pieces(g.eventIndex, g.position, g.position + 1))
            toggle(d.terms[g.id], p.word);
        if (g.kind == GeneratorKind::RightCusp)
            toggle(d.terms[g.id], Word{});
    }
    return d;
}

namespace {

using Table = std::vector<std::vector<std::uint8_t>>;

Table blank(int s)
{
    return Table(s + 2, std::vector<std::uint8_t>(s + 2, 0));
}

std::vector<int> generator_of_event(const FrontDiagram& diagram)
{
    std::vector<int> out(diagram.event_count(), -1);
    for (const auto& g : grade_generators(diagram))
        out[g.eventIndex] = g.id;
    return out;
}

Table left_cusp(const Table& t, int s, int k, std::uint8_t pairValue)
{
    Table next = blank(s + 2);
    auto old = [k](int i) { return i < k ? i : i - 2; };
    for (int i = 1; i <= s + 2; ++i)
        for (int j = i + 1; j <= s + 2; ++j) {
            bool ik = i == k || i == k + 1;
            bool jk = j == k || j == k + 1;
            if (ik && jk)
                next[i][j] = pairValue;
            else if (!ik && !jk)
                next[i][j] = t[old(i)][old(j)];
        }
    return next;
}

Table crossing(const Table& t, int s, int k, std::uint8_t value)
{
    Table next = t;
    for (int i = 1; i < k; ++i) {
        next[i][k] = t[i][k + 1] ^ (t[i][k] & value);
        next[i][k + 1] = t[i][k];
    }
    for (int j = k + 2; j <= s; ++j) {
        next[k + 1][j] = t[k][j] ^ (value & t[k + 1][j]);
        next[k][j] = t[k + 1][j];
    }
    next[k][k + 1] = 0;
    return next;
}

}  // namespace

SlotTables eps_half_disk_tables(const FrontDiagram& diagram, const Augmentation& eps)
{
    const auto genOf = generator_of_event(diagram);
    SlotTables out;
    Table t = blank(0);
    out.push_back(t);
    for (int e = 0; e < diagram.event_count(); ++e) {
        const auto& ev = diagram.events()[e];
        const int k = ev.position;
        const int s = diagram.strands(e);
        switch (ev.kind) {
        case EventKind::LeftCusp: t = left_cusp(t, s, k, 1); break;
        case EventKind::Crossing: t = crossing(t, s, k, eps.values[genOf[e]]); break;
        case EventKind::RightCusp: {
            Table next = blank(s - 2);
            auto pi = [k](int i) { return i < k ? i : i + 2; };
            for (int i = 1; i <= s - 2; ++i)
                for (int j = i + 1; j <= s - 2; ++j) {
                    int a = pi(i), b = pi(j);
                    next[i][j] = t[a][b];
                    if (a < k && b > k + 1)
                        next[i][j] ^= t[a][k + 1] & t[k][b];
                }
            t = std::move(next);
            break;
        }
        }
        out.push_back(t);
    }
    return out;
}

SlotTables epsH_half_disk_tables(const FrontDiagram& diagram, const Augmentation& eps, const Augmentation& epsPrime,
                                 const HomotopyCertificate& cert)
{
    const auto genOf = generator_of_event(diagram);
    SlotTables out;
    Table g = blank(0), gp = blank(0), h = blank(0);
    out.push_back(h);
    for (int e = 0; e < diagram.event_count(); ++e) {
        const auto& ev = diagram.events()[e];
        const int k = ev.position;
        const int s = diagram.strands(e);
        switch (ev.kind) {
        case EventKind::LeftCusp:
            g = left_cusp(g, s, k, 1);
            gp = left_cusp(gp, s, k, 1);
            h = left_cusp(h, s, k, 0);
            break;
        case EventKind::Crossing: {
            const int q = genOf[e];
            const std::uint8_t ev0 = eps.values[q], ev1 = epsPrime.values[q], hq = cert.h[q];
            Table next = h;
            for (int i = 1; i < k; ++i) {
                next[i][k] = h[i][k + 1] ^ (h[i][k] & ev1) ^ (g[i][k] & hq);
                next[i][k + 1] = h[i][k];
            }
            for (int j = k + 2; j <= s; ++j) {
                next[k + 1][j] = h[k][j] ^ (hq & gp[k + 1][j]) ^ (ev0 & h[k + 1][j]);
                next[k][j] = h[k + 1][j];
            }
            next[k][k + 1] = 0;
            h = std::move(next);
            g = crossing(g, s, k, ev0);
            gp = crossing(gp, s, k, ev1);
            break;
        }
        case EventKind::RightCusp: {
            Table ng = blank(s - 2), ngp = blank(s - 2), nh = blank(s - 2);
            auto pi = [k](int i) { return i < k ? i : i + 2; };
            for (int i = 1; i <= s - 2; ++i)
                for (int j = i + 1; j <= s - 2; ++j) {
                    int a = pi(i), b = pi(j);
                    ng[i][j] = g[a][b];
                    ngp[i][j] = gp[a][b];
                    nh[i][j] = h[a][b];
                    if (a < k && b > k + 1) {
                        ng[i][j] ^= g[a][k + 1] & g[k][b];
                        ngp[i][j] ^= gp[a][k + 1] & gp[k][b];
                        // H is an (eps, eps')-derivation: H(UL) = H(U)eps'(L) + eps(U)H(L).
                        nh[i][j] ^= (h[a][k + 1] & gp[k][b]) ^ (g[a][k + 1] & h[k][b]);
                    }
                }
            g = std::move(ng);
            gp = std::move(ngp);
            h = std::move(nh);
            break;
        }
        }
        out.push_back(h);
    }
    return out;
}

namespace {

void check_segment(const FrontDiagram& diagram, int slot, int i, int j)
{
    if (slot < 0 || slot >= diagram.slot_count() || i < 1 || j <= i || j > diagram.strands(slot))
        throw InvalidArgument("vertical segment [" + std::to_string(i) + "," + std::to_string(j) + "] at slot " +
                              std::to_string(slot) + " is out of range");
}

}  // namespace

std::uint8_t count_eps_half_disks(const FrontDiagram& diagram, const Augmentation& eps, int slot, int i, int j)
{
    check_segment(diagram, slot, i, j);
    return eps_half_disk_tables(diagram, eps)[slot][i][j];
}

std::uint8_t count_epsH_half_disks(const FrontDiagram& diagram, const Augmentation& eps,
                                   const Augmentation& epsPrime, const HomotopyCertificate& cert, int slot, int i,
                                   int j)
{
    check_segment(diagram, slot, i, j);
    return epsH_half_disk_tables(diagram, eps, epsPrime, cert)[slot][i][j];
}

std::uint8_t count_epsH_admissible_disks(const FrontDiagram& diagram, const Augmentation& eps,
                                         const Augmentation& epsPrime, const HomotopyCertificate& cert, int q)
{
    DiskQuery query;
    query.kind = DiskClass::EpsHAdmissible;
    query.originGenerator = q;
    query.eps = &eps;
    query.epsPrime = &epsPrime;
    query.cert = &cert;
    return enumerate_front_disks(diagram, query).size() % 2;
}

bool check_prop21(const FrontDiagram& diagram, const Augmentation& eps, const Augmentation& epsPrime,
                  const HomotopyCertificate& cert, int q)
{
    return (eps.values[q] ^ epsPrime.values[q]) == count_epsH_admissible_disks(diagram, eps, epsPrime, cert, q);
}

nlohmann::json to_json(const DiskBoundary& disk)
{
    static const char* roles[] = {"plain", "eps", "eps_prime", "homotopy", "cusp"};
    nlohmann::json corners = nlohmann::json::array();
    for (const auto& c : disk.corners)
        corners.push_back({{"generator", c.generator},
                           {"event", c.eventIndex},
                           {"thread", c.upper ? "upper" : "lower"},
                           {"role", roles[static_cast<int>(c.role)]}});
    nlohmann::json segments = nlohmann::json::array();
    for (const auto& s : disk.segments)
        segments.push_back({s.slot, s.upper, s.lower});
    nlohmann::json out = {{"word", disk.word}, {"corners", corners}, {"segments", segments}};
    if (disk.originGenerator >= 0)
        out["origin"] = {{"generator", disk.originGenerator}};
    else
        out["origin"] = {{"slot", disk.originSlot}, {"segment", {disk.i, disk.j}}};
    return out;
}

}  // namespace legmcs
