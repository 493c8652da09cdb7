#include "holey/regions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace holey;

namespace {

bool has_error(const Validation& v, const std::string& prefix) {
    return std::any_of(v.errors.begin(), v.errors.end(), [&](const std::string& e) { return e.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(10, 2, {-2, 6}, {-8, 0}).ok());
    auto dup = validate(10, 2, {0}, {0});
    CHECK_FALSE(dup.ok());
    CHECK(has_error(dup, "duplicate"));
    auto odd = validate(10, 2, {1}, {3});
    CHECK(has_error(odd, "parity"));

    auto many = validate(5, 0, {1, 2}, {12});
    CHECK(has_error(many, "parity: n"));
    CHECK(has_error(many, "bound: m"));
    CHECK(has_error(many, "charge"));
    CHECK(has_error(many, "parity: position 1"));
    CHECK(has_error(many, "bound: position 12"));

    CHECK_FALSE(validate(4, 1, {4}, {0}).ok());
    CHECK(validate(4, 1, {2}, {-2}).ok());
    CHECK_THROWS_AS(make_spec(4, 1, {0}, {}), SpecError);

    RegionSpec s = make_spec(10, 2, {6, -2}, {0, -8});
    CHECK(s.left == std::vector<int>{-2, 6});
    CHECK(s.right == std::vector<int>{-8, 0});
}

TEST_CASE("canonical text round trip") {
    RegionSpec s = make_spec(10, 2, {-2, 6}, {-8, 0});
    CHECK(s.str() == "n=10 m=2 L=-2,6 R=-8,0");
    CHECK(RegionSpec::parse(s.str()) == s);
    RegionSpec empty = make_spec(4, 3, {}, {});
    CHECK(RegionSpec::parse(empty.str()) == empty);
}

TEST_CASE("induced holes and charges") {
    // unbalanced on purpose: merging looks at positions only
    auto a = induced_holes(RegionSpec{8, 1, {-6}, {0, 2}});
    REQUIRE(a.size() == 2);
    CHECK(charge(a[0]) == -2);
    CHECK(charge(a[1]) == 4);
    CHECK(a[1].center == 1);

    auto b = induced_holes(make_spec(8, 1, {-6}, {0}));
    REQUIRE(b.size() == 2);
    CHECK(charge(b[0]) == -2);
    CHECK(charge(b[1]) == 2);

    auto c = induced_holes(make_spec(10, 1, {-8, -6, -4}, {0, 2, 4}));
    REQUIRE(c.size() == 2);
    CHECK(charge(c[0]) == -6);
    CHECK(charge(c[1]) == 6);
    CHECK(c[0].side == 6);

    // opposite orientations never merge
    auto d = induced_holes(make_spec(6, 1, {0}, {2}));
    CHECK(d.size() == 2);
}

TEST_CASE("induced holes partition the positions with zero total charge") {
    for (const RegionSpec& s : enumerate_specs(8, 1, 3)) {
        int total = 0;
        std::multiset<int> seen;
        for (const auto& h : induced_holes(s)) {
            total += charge(h);
            CHECK(h.side == 2 * static_cast<int>(h.constituents.size()));
            for (std::size_t k = 1; k < h.constituents.size(); ++k)
                CHECK(h.constituents[k] == h.constituents[k - 1] + 2);
            seen.insert(h.constituents.begin(), h.constituents.end());
        }
        std::multiset<int> all(s.left.begin(), s.left.end());
        all.insert(s.right.begin(), s.right.end());
        CHECK(seen == all);
        CHECK(total == 0);
    }
}

TEST_CASE("distance") {
    CHECK(distance(6, -2) == doctest::Approx(6.928203).epsilon(1e-6));
    CHECK(distance(3, 3) == 0);
    CHECK(distance(2, 0) == doctest::Approx(1.732051).epsilon(1e-6));
}

TEST_CASE("path endpoints") {
    auto lower = lgv_points(make_spec(10, 2, {0}, {2}), Part::lower);
    REQUIRE(lower.starts.size() == 3);
    CHECK(lower.starts[0] == LatticePoint{1, 0});
    CHECK(lower.starts[1] == LatticePoint{2, -1});
    CHECK(lower.starts[2] == LatticePoint{6, 5});
    CHECK(lower.ends[2] == LatticePoint{7, 6});
    CHECK(lower.ends[0] == LatticePoint{11, 10});

    auto full = lgv_points(make_spec(4, 1, {0}, {2}), Part::full);
    CHECK(full.starts.size() == 4);
    CHECK(full.ends.size() == 4);
}

TEST_CASE("hexagon cell counts") {
    auto small = region_from_cells(hexagon_cells(1, 1), Part::full, 1, 1);
    CHECK(small.size() == 10);
    CHECK(small.count(Orient::left) == 5);
    CHECK(small.count(Orient::right) == 5);
    for (int n = 2; n <= 8; n += 2)
        for (int m = 1; m <= 3; ++m)
            CHECK(build_region(make_spec(n, m, {}, {}), Part::full).size() == static_cast<std::size_t>(2 * (4 * m * n + n * n)));
}

TEST_CASE("hole footprint") {
    for (bool right : {true, false}) {
        auto cells = hole_cells(0, right);
        REQUIRE(cells.size() == 4);
        int r = 0;
        for (const auto& c : cells) r += c.o == Orient::right;
        CHECK(r == (right ? 3 : 1));
        CHECK(std::count(cells.begin(), cells.end(), unit_hole(0, right, Part::lower)) == 1);
        CHECK(std::count(cells.begin(), cells.end(), unit_hole(0, right, Part::upper)) == 1);
        auto [a, b] = axis_rhombus(0, right);
        CHECK(std::count(cells.begin(), cells.end(), a) == 1);
        CHECK(std::count(cells.begin(), cells.end(), b) == 1);
    }
}

TEST_CASE("every valid spec gives a balanced region split by the cut") {
    for (const RegionSpec& s : enumerate_specs(8, 2, 2)) {
        auto full = build_region(s, Part::full);
        CHECK(full.count(Orient::left) == full.count(Orient::right));
        std::set<Cell> removed;
        for (int l : s.left)
            for (const Cell& c : hole_cells(l, false)) removed.insert(c);
        for (int r : s.right)
            for (const Cell& c : hole_cells(r, true)) removed.insert(c);
        CHECK(full.size() == static_cast<std::size_t>(2 * (4 * s.m * s.n + s.n * s.n)) - removed.size());
        auto lower = build_region(s, Part::lower);
        auto upper = build_region(s, Part::upper);
        std::vector<Cell> joined(lower.cells);
        joined.insert(joined.end(), upper.cells.begin(), upper.cells.end());
        std::sort(joined.begin(), joined.end());
        CHECK(joined == full.cells);
        for (const auto& c : lower.cells) CHECK(below_cut(c, s.n));
        for (const auto& c : upper.cells) CHECK_FALSE(below_cut(c, s.n));
    }
}

TEST_CASE("lattice points are integral and distinct") {
    for (const RegionSpec& s : enumerate_specs(8, 2, 2))
        for (Part p : {Part::lower, Part::upper, Part::full}) {
            auto pts = lgv_points(s, p);
            CHECK(pts.starts.size() == pts.ends.size());
            std::set<LatticePoint> uniq(pts.starts.begin(), pts.starts.end());
            CHECK(uniq.size() == pts.starts.size());
        }
}

TEST_CASE("cell adjacency and reflections") {
    for (int s = -3; s <= 3; ++s)
        for (int y = -3; y <= 3; ++y)
            for (Orient o : {Orient::left, Orient::right}) {
                Cell c{s, y, o};
                for (Edge e : kEdges) {
                    Cell nb = neighbour(c, e);
                    CHECK(nb.o != c.o);
                    CHECK(neighbour(nb, e) == c);
                    auto va = vertices(c), vb = vertices(nb);
                    int shared = 0;
                    for (auto v : va) shared += std::count(vb.begin(), vb.end(), v);
                    CHECK(shared == 2);
                }
                CHECK(mirror_vertical(mirror_vertical(c)) == c);
                CHECK(mirror_horizontal(mirror_horizontal(c)) == c);
            }
}

TEST_CASE("free half region") {
    CHECK(free_half_allowed(make_spec(4, 1, {-2}, {2})));
    CHECK_FALSE(free_half_allowed(make_spec(4, 1, {2}, {-2})));
    CHECK_FALSE(free_half_allowed(make_spec(4, 1, {0}, {2})));
    auto half = build_region(make_spec(4, 1, {-2}, {2}), Part::free_half);
    std::size_t free_cells = std::count(half.free.begin(), half.free.end(), true);
    CHECK(free_cells > 0);
    for (std::size_t i = 0; i < half.size(); ++i)
        for (auto [x, y] : vertices(half.cells[i])) CHECK(x <= 0);
}

TEST_CASE("hole outside the hexagon is rejected by construction") {
    RegionSpec bad{4, 1, {6}, {0}};
    CHECK_THROWS(build_region(bad, Part::full));
}

TEST_CASE("part names") {
    CHECK(parse_part("lower") == Part::lower);
    CHECK(part_name(Part::free_half) == "free_half");
    CHECK_THROWS(parse_part("middle"));
}
