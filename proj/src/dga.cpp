#include "legmcs/dga.hpp"

#include <cstdlib>

#include "legmcs/errors.hpp"

namespace legmcs {

void toggle(WordSet& set, const Word& w)
{
    auto [it, inserted] = set.insert(w);
    if (!inserted)
        set.erase(it);
}

void toggle_all(WordSet& set, const WordSet& other)
{
    for (const auto& w : other)
        toggle(set, w);
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

WordSet multiply(const WordSet& a, const WordSet& b)
{
    WordSet out;
    for (const auto& x : a)
        for (const auto& y : b)
            toggle(out, concat(x, y));
    return out;
}

ResolvedDiagram resolve_front(const FrontDiagram& diagram)
{
    ResolvedDiagram r;
    auto gens = grade_generators(diagram);
    std::vector<int> genOfEvent(diagram.event_count(), -1);
    for (const auto& g : gens)
        genOfEvent[g.eventIndex] = g.id;

    for (int e = 0; e < diagram.event_count(); ++e) {
        const auto& ev = diagram.events()[e];
        switch (ev.kind) {
        case EventKind::LeftCusp:
            r.items.push_back({ResolvedKind::LeftCap, ev.position, -1, e, false});
            break;
        case EventKind::Crossing:
        case EventKind::RightCusp: {
            bool loop = ev.kind == EventKind::RightCusp;
            r.items.push_back({ResolvedKind::Crossing, ev.position, genOfEvent[e], e, loop});
            // Descending strand goes under.
            int under = diagram.arc_at(e, ev.position);
            int over = diagram.arc_at(e, ev.position + 1);
            r.crossings.push_back({genOfEvent[e], ev.position, e, loop, under, over});
            if (loop)
                r.items.push_back({ResolvedKind::RightCap, ev.position, -1, e, false});
            break;
        }
        }
    }
    return r;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("LEGMCS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 10'000'000ULL;
}

int Differential::degree(const Word& w) const
{
    int total = 0;
    for (int g : w)
        total += generators[g].degree;
    return total;
}

namespace {

// rho[i][j], 1 <= i < j <= s: corner words of disks lying left of the current
// slice whose right edge is the vertical segment from level i down to level j.
// Letters run counter-clockwise from the top right corner: the upper boundary
// right to left, then the lower boundary left to right.
class Sweep {
public:
    explicit Sweep(std::uint64_t budget) : budget_(budget) {}

    int strands() const { return s_; }
    const WordSet& at(int i, int j) const { return rho_[i][j]; }

    void left_cap(int k)
    {
        const int s = s_ + 2;
        Table next = empty(s);
        auto old = [k](int i) { return i < k ? i : i - 2; };
        for (int i = 1; i <= s; ++i)
            for (int j = i + 1; j <= s; ++j) {
                bool ik = i == k || i == k + 1;
                bool jk = j == k || j == k + 1;
                if (ik && jk)
                    next[i][j] = {Word{}};
                else if (!ik && !jk)
                    next[i][j] = rho_[old(i)][old(j)];
            }
        rho_ = std::move(next);
        s_ = s;
    }

    // Returns the disks whose positive corner is the left quadrant of g.
    WordSet crossing(int k, int g)
    {
        WordSet boundary = rho_[k][k + 1];
        Table next = rho_;
        const Word letter{g};
        for (int i = 1; i < k; ++i) {
            WordSet v = rho_[i][k + 1];
            for (const auto& w : rho_[i][k])
                toggle(v, concat(w, letter));
            charge(rho_[i][k].size() + v.size());
            next[i][k] = std::move(v);
            next[i][k + 1] = rho_[i][k];
        }
        for (int j = k + 2; j <= s_; ++j) {
            WordSet v = rho_[k][j];
            for (const auto& w : rho_[k + 1][j])
                toggle(v, concat(letter, w));
            charge(rho_[k + 1][j].size() + v.size());
            next[k + 1][j] = std::move(v);
            next[k][j] = rho_[k + 1][j];
        }
        next[k][k + 1].clear();
        rho_ = std::move(next);
        return boundary;
    }

    void right_cap(int k)
    {
        const int s = s_ - 2;
        Table next = empty(s);
        auto pi = [k](int i) { return i < k ? i : i + 2; };
        for (int i = 1; i <= s; ++i)
            for (int j = i + 1; j <= s; ++j) {
                int a = pi(i), b = pi(j);
                WordSet v = rho_[a][b];
                if (a < k && b > k + 1) {
                    charge(rho_[a][k].size() * rho_[k + 1][b].size());
                    toggle_all(v, multiply(rho_[a][k], rho_[k + 1][b]));
                }
                next[i][j] = std::move(v);
            }
        rho_ = std::move(next);
        s_ = s;
    }

private:
    using Table = std::vector<std::vector<WordSet>>;

    static Table empty(int s) { return Table(s + 2, std::vector<WordSet>(s + 2)); }

    void charge(std::uint64_t n)
    {
        used_ += n + 1;
        if (used_ > budget_)
            throw BudgetExceeded("DiskBudgetExceeded",
                                 "disk search exceeded the budget of " + std::to_string(budget_) + " states");
    }

    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    int s_ = 0;
    Table rho_ = empty(0);
};

}  // namespace

Differential differential(const FrontDiagram& diagram, std::uint64_t budget)
{
    if (!diagram.has_maslov())
        throw InvalidArgument("differential needs a graded diagram");
    Differential d;
    d.front = diagram.word();
    d.generators = grade_generators(diagram);
    d.terms.resize(d.generators.size());

    auto resolved = resolve_front(diagram);
    Sweep sweep(budget);
    for (std::size_t n = 0; n < resolved.items.size(); ++n) {
        const auto& item = resolved.items[n];
        switch (item.kind) {
        case ResolvedKind::LeftCap: sweep.left_cap(item.position); break;
        case ResolvedKind::Crossing:
            d.terms[item.generator] = sweep.crossing(item.position, item.generator);
            if (item.loop)
                toggle(d.terms[item.generator], Word{});  // the lobe of the loop
            break;
        case ResolvedKind::RightCap: sweep.right_cap(item.position); break;
        }
    }
    return d;
}

WordSet apply_differential(const Differential& d, const WordSet& x)
{
    WordSet out;
    for (const auto& w : x)
        for (std::size_t j = 0; j < w.size(); ++j) {
            Word prefix(w.begin(), w.begin() + j);
            Word suffix(w.begin() + j + 1, w.end());
            for (const auto& t : d.terms[w[j]])
                toggle(out, concat(concat(prefix, t), suffix));
        }
    return out;
}

bool check_d_squared(const Differential& d)
{
    for (const auto& t : d.terms)
        if (!apply_differential(d, t).empty())
            return false;
    return true;
}

bool degree_homogeneous(const Differential& d)
{
    for (std::size_t q = 0; q < d.terms.size(); ++q)
        for (const auto& w : d.terms[q])
            if (d.degree(w) != d.generators[q].degree - 1)
                return false;
    return true;
}

std::string generator_name(const Differential& d, int id)
{
    int crossings = 0, cusps = 0;
    for (int g = 0; g <= id; ++g) {
        if (d.generators[g].kind == GeneratorKind::Crossing)
            ++crossings;
        else
            ++cusps;
    }
    return d.generators[id].kind == GeneratorKind::Crossing ? "a" + std::to_string(crossings)
                                                            : "b" + std::to_string(cusps);
}

std::string word_to_string(const Differential& d, const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '*';
        out += generator_name(d, w[i]);
    }
    return out;
}

nlohmann::json to_json(const Differential& d)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : d.generators)
        gens.push_back({{"id", g.id},
                        {"kind", g.kind == GeneratorKind::Crossing ? "crossing" : "right_cusp"},
                        {"degree", g.degree}});
    nlohmann::json terms = nlohmann::json::object();
    for (std::size_t q = 0; q < d.terms.size(); ++q) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : d.terms[q]) {
            nlohmann::json letters = nlohmann::json::array();
            for (int g : w)
                letters.push_back(std::to_string(g));
            words.push_back(letters);
        }
        terms[std::to_string(q)] = words;
    }
    return {{"front", d.front}, {"generators", gens}, {"d", terms}};
}

}  // namespace legmcs
