#pragma once

// The Chekanov-Eliashberg differential over Z/2, computed on the resolution of
// a front.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "legmcs/front.hpp"

namespace legmcs {

// Letters are generator ids. The empty word is the unit.
using Word = std::vector<int>;
// A mod-2 sum of words.
using WordSet = std::set<Word>;

void toggle(WordSet& set, const Word& w);
void toggle_all(WordSet& set, const WordSet& other);
Word concat(const Word& a, const Word& b);
// Product of two mod-2 sums.
WordSet multiply(const WordSet& a, const WordSet& b);

enum class ResolvedKind { LeftCap, Crossing, RightCap };

struct ResolvedItem {
    ResolvedKind kind;
    int position = 0;    // level k
    int generator = -1;  // for crossings
    int frontEvent = 0;
    bool loop = false;   // crossing created by resolving a right cusp
};

struct ResolvedCrossing {
    int generator = 0;
    int position = 0;
    int frontEvent = 0;
    bool loop = false;
    int underArc = 0;  // the strand entering at level k
    int overArc = 0;   // the strand entering at level k+1
};

struct ResolvedDiagram {
    std::vector<ResolvedItem> items;
    std::vector<ResolvedCrossing> crossings;
};

ResolvedDiagram resolve_front(const FrontDiagram& diagram);

struct Differential {
    std::string front;
    std::vector<Generator> generators;
    std::vector<WordSet> terms;  // indexed by generator id

    int degree(const Word& w) const;
};

// Search budget: LEGMCS_BUDGET if set, otherwise 10^7.
std::uint64_t default_budget();

Differential differential(const FrontDiagram& diagram, std::uint64_t budget = default_budget());

// d applied to a sum of words, by the Leibniz rule.
WordSet apply_differential(const Differential& d, const WordSet& x);
bool check_d_squared(const Differential& d);
bool degree_homogeneous(const Differential& d);

nlohmann::json to_json(const Differential& d);
std::string word_to_string(const Differential& d, const Word& w);
std::string generator_name(const Differential& d, int id);

}  // namespace legmcs
