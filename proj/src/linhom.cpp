#include "legmcs/linhom.hpp"


#include "legmcs/errors.hpp"

namespace legmcs {

LinearizedComplex linearize(const Differential& d, const Augmentation& eps)
{
    const int n = static_cast<int>(d.generators.size());
    LinearizedComplex lc{d.generators, gf2::Matrix(n, n)};
    for (int q = 0; q < n; ++q)
        for (const auto& w : d.terms[q])
            for (std::size_t j = 0; j < w.size(); ++j) {
                std::uint8_t t = 1;
                for (std::size_t i = 0; i < w.size() && t; ++i)
                    if (i != j)
                        t &= eps.values[w[i]];
                if (t)
                    lc.matrix.flip(w[j], q);
            }
    return lc;
}

bool is_differential(const LinearizedComplex& lc)
{
    return (lc.matrix * lc.matrix).is_zero();
}

bool degree_homogeneous(const LinearizedComplex& lc)
{
    const int n = lc.matrix.rows();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (lc.matrix.at(p, q) && lc.generators[p].degree != lc.generators[q].degree - 1)
                return false;
    return true;
}

namespace {

// Rank of the part of the differential leaving degree k.
int rank_from(const LinearizedComplex& lc, int k)
{
    std::vector<int> cols, rows;
    for (const auto& g : lc.generators) {
        if (g.degree == k)
            cols.push_back(g.id);
        if (g.degree == k - 1)
            rows.push_back(g.id);
    }
    gf2::Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m.set(static_cast<int>(r), static_cast<int>(c), lc.matrix.at(rows[r], cols[c]));
    return gf2::rank(m);
}

}  // namespace

PoincarePolynomial homology_poincare(const LinearizedComplex& lc)
{
    if (!is_differential(lc) || !degree_homogeneous(lc))
        throw PropertyViolation("NotADifferential", "the linearized differential does not square to zero");
    std::map<int, int> count;
    for (const auto& g : lc.generators)
        ++count[g.degree];
    PoincarePolynomial p;
    for (const auto& [k, n] : count) {
        int dim = n - rank_from(lc, k) - rank_from(lc, k + 1);
        if (dim)
            p[k] = dim;
    }
    return p;
}

int euler_characteristic(const PoincarePolynomial& p)
{
    int chi = 0;
    for (const auto& [k, dim] : p)
        chi += (k % 2 == 0) ? dim : -dim;
    return chi;
}

std::string format_poincare(const PoincarePolynomial& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        auto [k, dim] = *it;
        if (!out.empty())
            out += " + ";
        std::string coeff = dim == 1 && k != 0 ? "" : std::to_string(dim);
        if (k == 0)
            out += coeff;
        else if (k == 1)
            out += coeff + "t";
        else
            out += coeff + "t^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    return out;
}

nlohmann::json to_json(const PoincarePolynomial& p)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, dim] : p)
        out[std::to_string(k)] = dim;
    return out;
}

}  // namespace legmcs
