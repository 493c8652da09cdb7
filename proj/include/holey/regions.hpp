#pragma once

// Region specifications, hole geometry and explicit triangle-cell regions.
//
// Geometry: lattice lines are vertical; a vertex is (x, y) with x the index
// of the vertical line (-n..n) and y the doubled height, so vertices on line x
// have y = x + n (mod 2). A cell is a unit triangle with one vertical edge:
//   right-pointing (s, y): vertices (s, y-1), (s, y+1), (s+1, y)
//   left-pointing  (s, y): vertices (s+1, y-1), (s+1, y+1), (s, y)

#include "holey/arith.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holey {

struct RegionSpec {
    int n = 0;
    int m = 0;
    std::vector<int> left;   // L, ascending
    std::vector<int> right;  // R, ascending

    int holes() const { return static_cast<int>(left.size()); }
    std::string str() const;
    static RegionSpec parse(const std::string& text);
    bool operator==(const RegionSpec&) const = default;
};

struct SpecError : std::invalid_argument {
    std::vector<std::string> problems;
    explicit SpecError(std::vector<std::string> list);
};

struct Validation {
    std::optional<RegionSpec> spec;
    std::vector<std::string> errors;
    bool ok() const { return spec.has_value(); }
};

// Collects every violation; positions may be given in any order.
Validation validate(int n, int m, std::vector<int> left, std::vector<int> right);
RegionSpec make_spec(int n, int m, std::vector<int> left, std::vector<int> right);

// Every valid spec with even n in [2, max_n], m in [1, max_m] and up to
// max_p holes of each orientation, in a fixed order.
std::vector<RegionSpec> enumerate_specs(int max_n, int max_m, int max_p);

struct InducedHole {
    Rational center;  // mean of the constituent positions
    int side = 2;
    bool right_pointing = true;
    std::vector<int> constituents;
};

int charge(const InducedHole& h);
std::vector<InducedHole> induced_holes(const RegionSpec& spec);

// Euclidean distance between hole midpoints at lattice positions x and y.
double distance(double x, double y);

struct LatticePoint {
    long x = 0;
    long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

enum class Part { full, lower, upper, free_half };

Part parse_part(const std::string& name);
std::string part_name(Part part);

struct PointSets {
    std::vector<LatticePoint> starts;
    std::vector<LatticePoint> ends;
};

// lower/upper: boundary points first, then one point per hole.
// full: boundary points for i = 1-m..m, and two points per hole (one on
// each side of the axis).
PointSets lgv_points(const RegionSpec& spec, Part part);

enum class Orient : std::uint8_t { left, right };

struct Cell {
    int s = 0;
    int y = 0;
    Orient o = Orient::left;
    auto operator<=>(const Cell&) const = default;
};

enum class Edge : std::uint8_t { vertical, rising, falling };

constexpr Edge kEdges[3] = {Edge::vertical, Edge::rising, Edge::falling};

Cell neighbour(const Cell& c, Edge e);
std::vector<std::pair<int, int>> vertices(const Cell& c);
Cell mirror_vertical(const Cell& c);
Cell mirror_horizontal(const Cell& c);
std::string to_string(const Cell& c);

struct TriangularRegion {
    Part kind = Part::full;
    int n = 0;
    int m = 0;
    std::vector<Cell> cells;   // sorted
    std::vector<bool> free;    // cells that may be covered by a half rhombus

    int index(const Cell& c) const;
    bool contains(const Cell& c) const { return index(c) >= 0; }
    std::size_t size() const { return cells.size(); }
    std::size_t count(Orient o) const;

    // called after cells are final
    void reindex();

private:
    int s_lo_ = 0, y_lo_ = 0, width_ = 0, height_ = 0;
    std::vector<int> grid_;
};

// All cells of the hexagon with sides n, 2m, n, n, 2m, n. Any n >= 1.
std::vector<Cell> hexagon_cells(int n, int m);

// Cells removed by a side-2 hole at lattice position x.
std::vector<Cell> hole_cells(int x, bool right_pointing);

// The single cell of a hole lying inside the lower (or upper) half.
Cell unit_hole(int x, bool right_pointing, Part half);

// Cells of the hole that lie on the cut line and form a horizontal rhombus
// inside the upper half.
std::pair<Cell, Cell> axis_rhombus(int x, bool right_pointing);

// True when every vertex of the cell lies on or below the zig-zag cut.
bool below_cut(const Cell& c, int n);

// A fold is a rhombus of the upper half straddling the cut; it carries
// weight 2 in the weighted count.
bool is_fold(const Cell& a, const Cell& b, int n);

TriangularRegion build_region(const RegionSpec& spec, Part kind);
TriangularRegion region_from_cells(std::vector<Cell> cells, Part kind, int n, int m);

bool free_half_allowed(const RegionSpec& spec);

}  // namespace holey
