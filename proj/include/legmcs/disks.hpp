#pragma once

// Disk classes on the front: (0,-1)-admissible disks, (eps,eps',H)-admissible
// disks and the two kinds of half-disks. Counts come from left-to-right
// recurrences; enumerate_front_disks is an explicit right-to-left search used
// to check them.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "legmcs/augment.hpp"
#include "legmcs/front.hpp"

namespace legmcs {

enum class DiskClass { ZeroMinusOne, EpsHAdmissible, EpsHalf, EpsHHalf };

enum class CornerRole { Plain, Eps, EpsPrime, Homotopy, Cusp };

struct DiskCorner {
    int generator = 0;
    int eventIndex = 0;
    bool upper = true;  // on the upper boundary thread of its piece
    CornerRole role = CornerRole::Plain;

    bool operator==(const DiskCorner&) const = default;
    auto operator<=>(const DiskCorner&) const = default;
};

// One vertical interval of the disk image at a slot.
struct DiskSegment {
    int slot = 0;
    int upper = 0;
    int lower = 0;

    bool operator==(const DiskSegment&) const = default;
    auto operator<=>(const DiskSegment&) const = default;
};

struct DiskBoundary {
    int originGenerator = -1;  // -1 when the disk starts at a vertical segment
    int originSlot = 0;
    int i = 0;
    int j = 0;
    Word word;                         // corner letters counter-clockwise from the origin
    std::vector<DiskCorner> corners;   // same order as word
    std::vector<DiskSegment> segments; // sorted; the canonical encoding
};

struct DiskQuery {
    DiskClass kind = DiskClass::EpsHalf;
    // Origin: a degree-0 crossing for the admissible classes, otherwise a
    // vertical segment [i, j] at a slot.
    int originGenerator = -1;
    int slot = 0;
    int i = 0;
    int j = 0;
    const Augmentation* eps = nullptr;
    const Augmentation* epsPrime = nullptr;
    const HomotopyCertificate* cert = nullptr;
    bool cuspCorners = false;  // allow corners at right cusps
};

std::vector<DiskBoundary> enumerate_front_disks(const FrontDiagram& diagram, const DiskQuery& query,
                                                std::uint64_t budget = default_budget());

// Differential read off the front (right cusp corners allowed), for comparison
// with the resolution engine.
Differential front_differential(const FrontDiagram& diagram, std::uint64_t budget = default_budget());

// tables[p][i][j], 1-based levels, for every slot p.
using SlotTables = std::vector<std::vector<std::vector<std::uint8_t>>>;

SlotTables eps_half_disk_tables(const FrontDiagram& diagram, const Augmentation& eps);
SlotTables epsH_half_disk_tables(const FrontDiagram& diagram, const Augmentation& eps, const Augmentation& epsPrime,
                                 const HomotopyCertificate& cert);

std::uint8_t count_eps_half_disks(const FrontDiagram& diagram, const Augmentation& eps, int slot, int i, int j);
std::uint8_t count_epsH_half_disks(const FrontDiagram& diagram, const Augmentation& eps,
                                   const Augmentation& epsPrime, const HomotopyCertificate& cert, int slot, int i,
                                   int j);

// Parity of (eps,eps',H)-admissible disks at a degree-0 crossing q, and the
// check that it equals eps(q) + eps'(q).
std::uint8_t count_epsH_admissible_disks(const FrontDiagram& diagram, const Augmentation& eps,
                                         const Augmentation& epsPrime, const HomotopyCertificate& cert, int q);
bool check_prop21(const FrontDiagram& diagram, const Augmentation& eps, const Augmentation& epsPrime,
                  const HomotopyCertificate& cert, int q);

nlohmann::json to_json(const DiskBoundary& disk);

}  // namespace legmcs
