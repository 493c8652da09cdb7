#pragma once

// The hole-filling map from tilings of a holey half region to tilings of the
// unholed half region: holes are paired, and each pair is joined by moving
// one unit triangle along a ribbon of rhombi.

#include "holey/oracle.hpp"
#include "holey/regions.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace holey {

struct ClaimViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HolePair {
    int first = 0;  // smaller position
    int second = 0;
    bool first_right = false;
    bool second_right = false;
};

struct HolePairing {
    std::vector<HolePair> pairs;
};

// Sort the remaining positions, take the first adjacent pair of differing
// orientation, remove it, repeat.
HolePairing pair_holes(const std::vector<int>& right, const std::vector<int>& left);

struct Ribbon {
    Cell start;               // unit hole of the first position
    Cell finish;              // unit hole of the second position
    std::vector<Cell> chain;  // start, rhombus cells in path order, finish
    std::vector<std::pair<Cell, Cell>> rhombi() const;  // rhombi along the path before transmission
};

// Working copy of a tiling of a half region while holes are being filled.
struct ZetaState {
    int n = 0;
    Part half = Part::lower;
    std::map<Cell, Cell> partner;
    std::set<Cell> cells;    // region cells, grows as holes are filled
    std::set<Cell> pending;  // unit holes not yet filled
};

// Tiling of build_region(spec, half); for the upper half the forced axis
// rhombi next to each hole are added.
ZetaState start_state(const Tiling& tiling, const RegionSpec& spec, Part half);

Ribbon propagation_path(const ZetaState& state, const HolePair& pair);
void transmit(ZetaState& state, const Ribbon& ribbon);
Tiling to_tiling(const ZetaState& state);

struct ZetaResult {
    Tiling image;
    std::vector<Ribbon> ribbons;
};

ZetaResult zeta(const Tiling& tiling, const RegionSpec& spec, Part half);

struct InjectionReport {
    RegionSpec spec;
    Part half = Part::lower;
    std::uint64_t tilings = 0;
    std::uint64_t distinct_images = 0;
    bool valid_images = true;
    std::uint64_t path_failures = 0;
    std::string first_failure;
    std::uint64_t weight_violations = 0;  // upper half: folds(T) > folds(image)
    bool locality_ok = true;
    bool disjoint_ok = true;
    bool ok = false;  // distinct, valid, no path failures
    bool weight_ok() const { return weight_violations == 0; }
};

InjectionReport verify_injection(const RegionSpec& spec, Part half, std::uint64_t budget = kDefaultBudget);

}  // namespace holey
