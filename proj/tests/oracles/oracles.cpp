#include "oracles.hpp"

#include <map>

namespace oracle {

std::uint8_t evaluate(const Values& eps, const legmcs::Word& w)
{
    std::uint8_t v = 1;
    for (int g : w)
        v &= eps[g];
    return v;
}

std::vector<Values> augmentations(const legmcs::Differential& d)
{
    std::vector<int> free;
    for (const auto& g : d.generators)
        if (g.kind == legmcs::GeneratorKind::Crossing && g.degree == 0)
            free.push_back(g.id);
    std::vector<Values> out;
    for (std::uint64_t mask = 0; mask < (1ULL << free.size()); ++mask) {
        Values eps(d.generators.size(), 0);
        for (std::size_t b = 0; b < free.size(); ++b)
            eps[free[b]] = (mask >> b) & 1;
        bool ok = true;
        for (const auto& terms : d.terms) {
            std::uint8_t sum = 0;
            for (const auto& w : terms)
                sum ^= evaluate(eps, w);
            if (sum) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(eps);
    }
    return out;
}

std::uint8_t h_of_dq(const legmcs::Differential& d, const Values& eps, const Values& epsPrime, const Values& h, int q)
{
    std::uint8_t sum = 0;
    for (const auto& w : d.terms[q])
        for (std::size_t j = 0; j < w.size(); ++j) {
            std::uint8_t t = h[w[j]];
            for (std::size_t i = 0; i < j; ++i)
                t &= eps[w[i]];
            for (std::size_t i = j + 1; i < w.size(); ++i)
                t &= epsPrime[w[i]];
            sum ^= t;
        }
    return sum;
}

std::optional<Values> homotopy(const legmcs::Differential& d, const Values& eps, const Values& epsPrime)
{
    std::vector<int> free;
    for (const auto& g : d.generators)
        if (g.kind == legmcs::GeneratorKind::Crossing && g.degree == -1)
            free.push_back(g.id);
    for (std::uint64_t mask = 0; mask < (1ULL << free.size()); ++mask) {
        Values h(d.generators.size(), 0);
        for (std::size_t b = 0; b < free.size(); ++b)
            h[free[b]] = (mask >> b) & 1;
        bool ok = true;
        for (std::size_t q = 0; q < d.generators.size() && ok; ++q)
            ok = (eps[q] ^ epsPrime[q]) == h_of_dq(d, eps, epsPrime, h, static_cast<int>(q));
        if (ok)
            return h;
    }
    return std::nullopt;
}

bool d_squared_zero(const legmcs::Differential& d)
{
    for (const auto& terms : d.terms) {
        std::map<legmcs::Word, int> count;
        for (const auto& w : terms)
            for (std::size_t j = 0; j < w.size(); ++j)
                for (const auto& t : d.terms[w[j]]) {
                    legmcs::Word x(w.begin(), w.begin() + j);
                    x.insert(x.end(), t.begin(), t.end());
                    x.insert(x.end(), w.begin() + j + 1, w.end());
                    ++count[x];
                }
        for (const auto& [w, c] : count)
            if (c % 2)
                return false;
    }
    return true;
}

}  // namespace oracle
