#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the Differential data type and are only used to check it.

#include <cstdint>
#include <optional>
#include <vector>

#include "legmcs/dga.hpp"

namespace oracle {

using Values = std::vector<std::uint8_t>;  // indexed by generator id

// eps applied to a word: product of letter values, 1 on the empty word.
std::uint8_t evaluate(const Values& eps, const legmcs::Word& w);

// All assignments on degree-0 crossings with eps(dq) = 0 for every q.
std::vector<Values> augmentations(const legmcs::Differential& d);

// (eps, eps')-derivation H applied to dq.
std::uint8_t h_of_dq(const legmcs::Differential& d, const Values& eps, const Values& epsPrime, const Values& h, int q);

// Tries every H on the degree -1 crossings. Returns the first one that
// satisfies eps - eps' = H d on all generators.
std::optional<Values> homotopy(const legmcs::Differential& d, const Values& eps, const Values& epsPrime);

// Symbolic d^2 computed by expanding each word letter by letter.
bool d_squared_zero(const legmcs::Differential& d);

}  // namespace oracle
