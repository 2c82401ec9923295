#pragma once

// Static SVG drawings of fronts with optional handleslide marks and disks.
// Events sit between slot columns, strands at integer levels; output is a
// pure function of the inputs.

#include <string>
#include <vector>

#include "legmcs/disks.hpp"
#include "legmcs/mcs.hpp"

namespace legmcs {

struct RenderOptions {
    double slotWidth = 60;
    double levelHeight = 36;
    double margin = 30;
    bool labels = true;
};

std::string render_svg(const FrontDiagram& diagram, const MCS* mcs = nullptr,
                       const std::vector<DiskBoundary>& disks = {}, const RenderOptions& options = {});

}  // namespace legmcs
