#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "legmcs/disks.hpp"
#include "legmcs/errors.hpp"
#include "legmcs/verify.hpp"

namespace testing {

inline std::string corpus_file(const std::string& name)
{
    std::ifstream in(std::string(LEGMCS_CORPUS_DIR) + "/" + name + ".front");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline legmcs::Analysis corpus(const std::string& name) { return legmcs::analyze(name, corpus_file(name)); }

inline std::shared_ptr<const legmcs::FrontDiagram> diagram(const std::string& word)
{
    return std::make_shared<const legmcs::FrontDiagram>(legmcs::load_front(word));
}

inline int generator_id(const legmcs::Differential& d, const std::string& name)
{
    for (const auto& g : d.generators)
        if (legmcs::generator_name(d, g.id) == name)
            return g.id;
    return -1;
}

inline legmcs::Augmentation aug(const legmcs::Differential& d, std::initializer_list<const char*> names)
{
    std::vector<int> support;
    for (const char* n : names)
        support.push_back(generator_id(d, n));
    return legmcs::augmentation_from_support(d, support);
}

inline legmcs::Word word(const legmcs::Differential& d, std::initializer_list<const char*> names)
{
    legmcs::Word w;
    for (const char* n : names)
        w.push_back(generator_id(d, n));
    return w;
}

inline const char* kCorpus[] = {"unknot", "unknot-twisted", "trefoil", "trefoil-alt", "dstab-unknot",
                                "figure1", "nested", "six-strand"};

}  // namespace testing
