#pragma once

// Linearized contact homology over Z/2.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "legmcs/augment.hpp"
#include "legmcs/gf2.hpp"

namespace legmcs {

struct LinearizedComplex {
    std::vector<Generator> generators;
    gf2::Matrix matrix;  // matrix.at(p, q): coefficient of p in the linear part of d q
};

LinearizedComplex linearize(const Differential& d, const Augmentation& eps);

bool is_differential(const LinearizedComplex& lc);
bool degree_homogeneous(const LinearizedComplex& lc);

// degree -> dimension; degrees with zero homology are omitted.
using PoincarePolynomial = std::map<int, int>;

PoincarePolynomial homology_poincare(const LinearizedComplex& lc);
int euler_characteristic(const PoincarePolynomial& p);

std::string format_poincare(const PoincarePolynomial& p);
nlohmann::json to_json(const PoincarePolynomial& p);

}  // namespace legmcs
