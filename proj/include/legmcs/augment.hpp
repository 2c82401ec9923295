#pragma once

// Augmentations of the DGA and their classification up to chain homotopy.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "legmcs/dga.hpp"
#include "legmcs/gf2.hpp"

namespace legmcs {

// Values indexed by generator id; nonzero only on degree-0 crossings.
struct Augmentation {
    std::vector<std::uint8_t> values;

    std::uint8_t operator()(int g) const { return values[g]; }
    std::uint8_t evaluate(const Word& w) const;
    std::vector<int> support() const;
    bool operator==(const Augmentation&) const = default;
    auto operator<=>(const Augmentation&) const = default;
};

// h indexed by generator id; nonzero only on degree -1 crossings.
struct HomotopyCertificate {
    std::vector<std::uint8_t> h;

    std::vector<int> support() const;
};

std::vector<Augmentation> enumerate_augmentations(const Differential& d, int cap = 24);
bool is_augmentation(const Differential& d, const Augmentation& eps);
Augmentation augmentation_from_support(const Differential& d, const std::vector<int>& support);

// Rows are degree-0 generators, unknowns the degree -1 crossings.
struct HomotopySystem {
    std::vector<int> rows;
    std::vector<int> unknowns;
    gf2::Matrix m;
    gf2::Vector b;
};

// The (eps, eps')-derivation extension of h evaluated on d q.
std::uint8_t homotopy_term(const Differential& d, const Augmentation& eps, const Augmentation& epsPrime,
                           const std::vector<std::uint8_t>& h, int q);

HomotopySystem homotopy_system(const Augmentation& eps, const Augmentation& epsPrime, const Differential& d);
std::optional<HomotopyCertificate> solve_homotopy(const Augmentation& eps, const Augmentation& epsPrime,
                                                  const Differential& d);
bool verify_certificate(const Differential& d, const Augmentation& eps, const Augmentation& epsPrime,
                        const HomotopyCertificate& cert);

struct HomotopyClasses {
    std::vector<std::vector<int>> classes;  // augmentation indices, sorted
    std::vector<int> classOf;
    std::map<std::pair<int, int>, HomotopyCertificate> certificates;

    int count() const { return static_cast<int>(classes.size()); }
};

HomotopyClasses homotopy_classes(const std::vector<Augmentation>& augs, const Differential& d);

nlohmann::json to_json(const std::vector<Augmentation>& augs, const HomotopyClasses& classes);

}  // namespace legmcs
