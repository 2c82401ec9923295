#include "legmcs/augment.hpp"

#include <numeric>

#include "legmcs/errors.hpp"

namespace legmcs {

std::uint8_t Augmentation::evaluate(const Word& w) const
{
    for (int g : w)
        if (!values[g])
            return 0;
    return 1;
}

std::vector<int> Augmentation::support() const
{
    std::vector<int> out;
    for (std::size_t g = 0; g < values.size(); ++g)
        if (values[g])
            out.push_back(static_cast<int>(g));
    return out;
}

std::vector<int> HomotopyCertificate::support() const
{
    std::vector<int> out;
    for (std::size_t g = 0; g < h.size(); ++g)
        if (h[g])
            out.push_back(static_cast<int>(g));
    return out;
}

bool is_augmentation(const Differential& d, const Augmentation& eps)
{
    for (std::size_t g = 0; g < d.generators.size(); ++g)
        if (eps.values[g] && (d.generators[g].kind != GeneratorKind::Crossing || d.generators[g].degree != 0))
            return false;
    for (const auto& terms : d.terms) {
        std::uint8_t sum = 0;
        for (const auto& w : terms)
            sum ^= eps.evaluate(w);
        if (sum)
            return false;
    }
    return true;
}

Augmentation augmentation_from_support(const Differential& d, const std::vector<int>& support)
{
    Augmentation eps{std::vector<std::uint8_t>(d.generators.size(), 0)};
    for (int g : support) {
        if (g < 0 || g >= static_cast<int>(d.generators.size()))
            throw InvalidArgument("generator " + std::to_string(g) + " does not exist");
        eps.values[g] = 1;
    }
    if (!is_augmentation(d, eps))
        throw InvalidArgument("the given support is not an augmentation");
    return eps;
}

std::vector<Augmentation> enumerate_augmentations(const Differential& d, int cap)
{
    std::vector<int> free;
    for (const auto& g : d.generators)
        if (g.kind == GeneratorKind::Crossing && g.degree == 0)
            free.push_back(g.id);
    if (static_cast<int>(free.size()) > cap)
        throw BudgetExceeded("AugmentationBudgetExceeded", std::to_string(free.size()) +
                                                               " degree-0 crossings exceed the cap of " +
                                                               std::to_string(cap));
    std::vector<Augmentation> out;
    Augmentation eps{std::vector<std::uint8_t>(d.generators.size(), 0)};
    for (std::uint64_t mask = 0; mask < (1ULL << free.size()); ++mask) {
        for (std::size_t b = 0; b < free.size(); ++b)
            eps.values[free[b]] = (mask >> b) & 1;
        if (is_augmentation(d, eps))
            out.push_back(eps);
    }
    return out;
}

std::uint8_t homotopy_term(const Differential& d, const Augmentation& eps, const Augmentation& epsPrime,
                           const std::vector<std::uint8_t>& h, int q)
{
    std::uint8_t sum = 0;
    for (const auto& w : d.terms[q])
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (!h[w[j]])
                continue;
            std::uint8_t t = 1;
            for (std::size_t i = 0; i < j && t; ++i)
                t &= eps.values[w[i]];
            for (std::size_t i = j + 1; i < w.size() && t; ++i)
                t &= epsPrime.values[w[i]];
            sum ^= t;
        }
    return sum;
}

HomotopySystem homotopy_system(const Augmentation& eps, const Augmentation& epsPrime, const Differential& d)
{
    HomotopySystem sys;
    const int n = static_cast<int>(d.generators.size());
    std::vector<int> column(n, -1);
    for (const auto& g : d.generators)
        if (g.kind == GeneratorKind::Crossing && g.degree == -1) {
            column[g.id] = static_cast<int>(sys.unknowns.size());
            sys.unknowns.push_back(g.id);
        }

    // Every generator gets a row; only the degree-0 ones can be nonzero.
    gf2::Matrix all(n, static_cast<int>(sys.unknowns.size()));
    gf2::Vector rhs(n, 0);
    for (int q = 0; q < n; ++q) {
        rhs[q] = eps.values[q] ^ epsPrime.values[q];
        for (const auto& w : d.terms[q])
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (column[w[j]] < 0)
                    continue;
                std::uint8_t t = 1;
                for (std::size_t i = 0; i < j && t; ++i)
                    t &= eps.values[w[i]];
                for (std::size_t i = j + 1; i < w.size() && t; ++i)
                    t &= epsPrime.values[w[i]];
                if (t)
                    all.flip(q, column[w[j]]);
            }
    }
    for (int q = 0; q < n; ++q) {
        if (d.generators[q].degree == 0) {
            sys.rows.push_back(q);
            continue;
        }
        bool zero = !rhs[q];
        for (int c = 0; c < all.cols() && zero; ++c)
            zero = !all.at(q, c);
        if (!zero)
            throw PropertyViolation("HomotopyRowNonzero", "the homotopy equation of " + generator_name(d, q) +
                                                              " (degree " + std::to_string(d.generators[q].degree) +
                                                              ") does not vanish");
    }
    sys.m = gf2::Matrix(static_cast<int>(sys.rows.size()), static_cast<int>(sys.unknowns.size()));
    sys.b.assign(sys.rows.size(), 0);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (int c = 0; c < all.cols(); ++c)
            sys.m.set(static_cast<int>(r), c, all.at(sys.rows[r], c));
        sys.b[r] = rhs[sys.rows[r]];
    }
    return sys;
}

std::optional<HomotopyCertificate> solve_homotopy(const Augmentation& eps, const Augmentation& epsPrime,
                                                  const Differential& d)
{
    auto sys = homotopy_system(eps, epsPrime, d);
    auto x = gf2::solve(sys.m, sys.b);
    if (!x)
        return std::nullopt;
    HomotopyCertificate cert{std::vector<std::uint8_t>(d.generators.size(), 0)};
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c)
        cert.h[sys.unknowns[c]] = (*x)[c];
    return cert;
}

bool verify_certificate(const Differential& d, const Augmentation& eps, const Augmentation& epsPrime,
                        const HomotopyCertificate& cert)
{
    for (std::size_t q = 0; q < d.generators.size(); ++q) {
        if (cert.h[q] && (d.generators[q].kind != GeneratorKind::Crossing || d.generators[q].degree != -1))
            return false;
        if ((eps.values[q] ^ epsPrime.values[q]) != homotopy_term(d, eps, epsPrime, cert.h, static_cast<int>(q)))
            return false;
    }
    return true;
}

HomotopyClasses homotopy_classes(const std::vector<Augmentation>& augs, const Differential& d)
{
    const int n = static_cast<int>(augs.size());
    HomotopyClasses out;
    std::vector<std::vector<std::uint8_t>> related(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto cert = solve_homotopy(augs[i], augs[j], d);
            if (!cert)
                continue;
            if (!verify_certificate(d, augs[i], augs[j], *cert))
                throw PropertyViolation("EquivalenceAuditFailed", "certificate for pair (" + std::to_string(i) +
                                                                      "," + std::to_string(j) + ") does not verify");
            related[i][j] = 1;
            out.certificates.emplace(std::make_pair(i, j), std::move(*cert));
        }

    for (int i = 0; i < n; ++i) {
        if (!related[i][i])
            throw PropertyViolation("EquivalenceAuditFailed", "augmentation " + std::to_string(i) +
                                                                  " is not homotopic to itself");
        for (int j = 0; j < n; ++j) {
            if (related[i][j] != related[j][i])
                throw PropertyViolation("EquivalenceAuditFailed", "relation is not symmetric on (" +
                                                                      std::to_string(i) + "," + std::to_string(j) + ")");
            for (int k = 0; k < n; ++k)
                if (related[i][j] && related[j][k] && !related[i][k])
                    throw PropertyViolation("EquivalenceAuditFailed",
                                            "relation is not transitive on (" + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(k) + ")");
        }
    }

    // Union-find over the realized relation.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (related[i][j])
                parent[find(j)] = find(i);
    out.classOf.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (out.classOf[root] < 0) {
            out.classOf[root] = static_cast<int>(out.classes.size());
            out.classes.push_back({});
        }
        out.classOf[i] = out.classOf[root];
        out.classes[out.classOf[i]].push_back(i);
    }
    return out;
}

nlohmann::json to_json(const std::vector<Augmentation>& augs, const HomotopyClasses& classes)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& eps : augs)
        a.push_back(eps.support());
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& [pair, cert] : classes.certificates)
        if (pair.first != pair.second)
            certs.push_back({{"from", pair.first}, {"to", pair.second}, {"h", cert.support()}});
    return {{"augmentations", a}, {"classes", classes.classes}, {"certificates", certs}};
}

}  // namespace legmcs
