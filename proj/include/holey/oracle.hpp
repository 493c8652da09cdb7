#pragma once

// Brute-force counts that share no code with the determinant formulas:
// exhaustive lattice path families and exhaustive rhombus tilings.

#include "holey/arith.hpp"
#include "holey/regions.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace holey {

struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes;
    BudgetExceeded(const std::string& what, std::uint64_t visited) : std::runtime_error(what), nodes(visited) {}
};

constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class Constraint { none, avoid_diagonal, weighted_below };

struct PathFamily {
    std::vector<std::vector<LatticePoint>> paths;  // one per start, in start order
    Integer weight = 1;
};

// Weighted number of vertex-disjoint families of north/east paths joining
// the starts to the ends under some bijection. avoid_diagonal keeps every
// vertex strictly below y = x; weighted_below keeps x >= y and weighs each
// diagonal vertex by 2.
Integer count_families(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
                       Constraint constraint, std::uint64_t budget = kDefaultBudget);

std::vector<PathFamily> enumerate_families(const std::vector<LatticePoint>& starts,
                                           const std::vector<LatticePoint>& ends, Constraint constraint,
                                           std::uint64_t budget = kDefaultBudget);

// 2^(diagonal vertices) recomputed from stored paths.
Integer family_weight(const PathFamily& family, Constraint constraint);

struct Tiling {
    std::vector<std::pair<Cell, Cell>> rhombi;  // each pair ordered, list sorted

    void normalise();
    bool operator==(const Tiling&) const = default;
};

// Exact cover check: rhombi are disjoint edge-adjacent pairs covering every
// non-free cell of the region exactly once.
bool is_tiling_of(const Tiling& t, const TriangularRegion& region);

enum class TileWeight { none, folds };

// Transfer count over the cells in sorted order. Free cells may stay
// single (half rhombus across the boundary).
Integer count_tilings(const TriangularRegion& region, TileWeight weight = TileWeight::none);

// Streams every tiling in a canonical order: the first uncovered cell is
// paired with each of its later neighbours in edge order. The callback
// returns false to stop early. Returns the number of tilings visited.
std::uint64_t for_each_tiling(const TriangularRegion& region, const std::function<bool(const Tiling&)>& visit,
                              std::uint64_t budget = kDefaultBudget);

// Partner-index form used by the zeta code: partner[i] is the index paired
// with cell i.
std::uint64_t for_each_matching(const TriangularRegion& region,
                                const std::function<bool(const std::vector<int>&)>& visit,
                                std::uint64_t budget = kDefaultBudget);

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::uint64_t budget = kDefaultBudget);

int fold_count(const Tiling& t, int n);

enum class Axis { horizontal, vertical };

// Tilings of build_region(spec, full) invariant under the reflection.
Integer count_symmetric(const RegionSpec& spec, Axis axis, std::uint64_t budget = kDefaultBudget);

// Tilings of the west half with a free vertical boundary on x = 0.
Integer count_free_boundary(int n, int m, const std::vector<int>& left);

}  // namespace holey
