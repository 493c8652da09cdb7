#include "holey/regions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace holey {

namespace {

std::string join(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad hole position: " + item);
        out.push_back(v);
    }
    return out;
}

std::string describe(const std::vector<std::string>& problems) {
    std::string s = "invalid region:";
    for (const auto& p : problems) s += " " + p + ";";
    return s;
}

bool parity_ok(int y, int x, int n) { return ((y - x - n) % 2 + 2) % 2 == 0; }

}  // namespace

std::string RegionSpec::str() const {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " L=" + join(left) + " R=" + join(right);
}

RegionSpec RegionSpec::parse(const std::string& text) {
    std::stringstream in(text);
    std::string token;
    int n = 0, m = 0;
    std::vector<int> L, R;
    bool seen_n = false, seen_m = false;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad region token: " + token);
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "n") { n = std::stoi(value); seen_n = true; }
        else if (key == "m") { m = std::stoi(value); seen_m = true; }
        else if (key == "L") L = parse_list(value);
        else if (key == "R") R = parse_list(value);
        else throw std::invalid_argument("bad region key: " + key);
    }
    if (!seen_n || !seen_m) throw std::invalid_argument("region text needs n= and m=");
    return make_spec(n, m, L, R);
}

SpecError::SpecError(std::vector<std::string> list)
    : std::invalid_argument(describe(list)), problems(std::move(list)) {}

Validation validate(int n, int m, std::vector<int> left, std::vector<int> right) {
    Validation v;
    if (n < 2 || n % 2) v.errors.push_back("parity: n must be a positive even integer");
    if (m < 1) v.errors.push_back("bound: m must be positive");
    if (left.size() != right.size()) v.errors.push_back("charge: |L| must equal |R|");
    std::set<int> seen;
    bool duplicate = false;
    for (const auto* side : {&left, &right}) {
        for (int x : *side) {
            if (x % 2) v.errors.push_back("parity: position " + std::to_string(x) + " is odd");
            if (n >= 2 && (x < -n + 2 || x > n - 2))
                v.errors.push_back("bound: position " + std::to_string(x) + " outside [-n+2, n-2]");
            if (!seen.insert(x).second) duplicate = true;
        }
    }
    if (duplicate) v.errors.push_back("duplicate position");
    if (v.errors.empty()) {
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        v.spec = RegionSpec{n, m, std::move(left), std::move(right)};
    }
    return v;
}

RegionSpec make_spec(int n, int m, std::vector<int> left, std::vector<int> right) {
    auto v = validate(n, m, std::move(left), std::move(right));
    if (!v.ok()) throw SpecError(v.errors);
    return *v.spec;
}

std::vector<RegionSpec> enumerate_specs(int max_n, int max_m, int max_p) {
    std::vector<RegionSpec> out;
    for (int n = 2; n <= max_n; n += 2) {
        std::vector<int> sites;
        for (int x = -n + 2; x <= n - 2; x += 2) sites.push_back(x);
        const int k = static_cast<int>(sites.size());
        for (int m = 1; m <= max_m; ++m)
            for (int p = 0; p <= max_p && 2 * p <= k; ++p) {
                // assign each site to L, R or neither
                std::vector<int> label(k, 0);
                for (;;) {
                    std::vector<int> left, right;
                    for (int i = 0; i < k; ++i) {
                        if (label[i] == 1) left.push_back(sites[i]);
                        if (label[i] == 2) right.push_back(sites[i]);
                    }
                    if (static_cast<int>(left.size()) == p && static_cast<int>(right.size()) == p)
                        out.push_back(RegionSpec{n, m, left, right});
                    int i = 0;
                    while (i < k && label[i] == 2) label[i++] = 0;
                    if (i == k) break;
                    ++label[i];
                }
            }
    }
    return out;
}

int charge(const InducedHole& h) { return h.right_pointing ? h.side : -h.side; }

std::vector<InducedHole> induced_holes(const RegionSpec& spec) {
    std::vector<std::pair<int, bool>> items;
    for (int x : spec.left) items.emplace_back(x, false);
    for (int x : spec.right) items.emplace_back(x, true);
    std::sort(items.begin(), items.end());
    std::vector<InducedHole> out;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i + 1;
        while (j < items.size() && items[j].second == items[i].second && items[j].first == items[j - 1].first + 2) ++j;
        InducedHole h;
        h.right_pointing = items[i].second;
        h.side = 2 * static_cast<int>(j - i);
        long total = 0;
        for (std::size_t k = i; k < j; ++k) {
            h.constituents.push_back(items[k].first);
            total += items[k].first;
        }
        h.center = Rational(total, static_cast<long>(j - i));
        h.center.canonicalize();
        out.push_back(std::move(h));
        i = j;
    }
    return out;
}

double distance(double x, double y) { return std::sqrt(3.0) / 2.0 * std::fabs(x - y); }

Part parse_part(const std::string& name) {
    if (name == "full") return Part::full;
    if (name == "lower") return Part::lower;
    if (name == "upper" || name == "upper_weighted") return Part::upper;
    if (name == "free_half") return Part::free_half;
    throw std::invalid_argument("unknown region kind: " + name);
}

std::string part_name(Part part) {
    switch (part) {
        case Part::full: return "full";
        case Part::lower: return "lower";
        case Part::upper: return "upper";
        case Part::free_half: return "free_half";
    }
    return "?";
}

PointSets lgv_points(const RegionSpec& spec, Part part) {
    PointSets pts;
    const long n = spec.n, m = spec.m;
    if (part == Part::free_half) throw std::invalid_argument("no lattice path picture for free_half");
    const long first = part == Part::full ? 1 - m : 1;
    for (long i = first; i <= m; ++i) pts.starts.push_back({i, 1 - i});
    for (long j = first; j <= m; ++j) pts.ends.push_back({n + j, n + 1 - j});
    for (int l : spec.left) {
        long c = n / 2 + l / 2;
        pts.starts.push_back({c + 1, c});
        if (part == Part::full) pts.starts.push_back({c, c + 1});
    }
    for (int r : spec.right) {
        long c = n / 2 + r / 2;
        pts.ends.push_back({c + 1, c});
        if (part == Part::full) pts.ends.push_back({c, c + 1});
    }
    return pts;
}

Cell neighbour(const Cell& c, Edge e) {
    if (c.o == Orient::right) {
        switch (e) {
            case Edge::vertical: return {c.s - 1, c.y, Orient::left};
            case Edge::falling: return {c.s, c.y + 1, Orient::left};
            case Edge::rising: return {c.s, c.y - 1, Orient::left};
        }
    }
    switch (e) {
        case Edge::vertical: return {c.s + 1, c.y, Orient::right};
        case Edge::rising: return {c.s, c.y + 1, Orient::right};
        case Edge::falling: return {c.s, c.y - 1, Orient::right};
    }
    return c;
}

std::vector<std::pair<int, int>> vertices(const Cell& c) {
    if (c.o == Orient::right) return {{c.s, c.y - 1}, {c.s, c.y + 1}, {c.s + 1, c.y}};
    return {{c.s + 1, c.y - 1}, {c.s + 1, c.y + 1}, {c.s, c.y}};
}

Cell mirror_vertical(const Cell& c) {
    return {-c.s - 1, c.y, c.o == Orient::right ? Orient::left : Orient::right};
}

Cell mirror_horizontal(const Cell& c) { return {c.s, -c.y, c.o}; }

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.s) + "," + std::to_string(c.y) + "," + (c.o == Orient::right ? "R" : "L") + ")";
}

int TriangularRegion::index(const Cell& c) const {
    int ds = c.s - s_lo_, dy = c.y - y_lo_;
    if (ds < 0 || ds >= width_ || dy < 0 || dy >= height_) return -1;
    return grid_[(static_cast<std::size_t>(ds) * height_ + dy) * 2 + (c.o == Orient::right)];
}

std::size_t TriangularRegion::count(Orient o) const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [o](const Cell& c) { return c.o == o; }));
}

void TriangularRegion::reindex() {
    std::sort(cells.begin(), cells.end());
    if (free.size() != cells.size()) free.assign(cells.size(), false);
    grid_.clear();
    if (cells.empty()) {
        width_ = height_ = 0;
        return;
    }
    int s_hi = cells.front().s, y_hi = cells.front().y;
    s_lo_ = s_hi;
    y_lo_ = y_hi;
    for (const auto& c : cells) {
        s_lo_ = std::min(s_lo_, c.s);
        s_hi = std::max(s_hi, c.s);
        y_lo_ = std::min(y_lo_, c.y);
        y_hi = std::max(y_hi, c.y);
    }
    width_ = s_hi - s_lo_ + 1;
    height_ = y_hi - y_lo_ + 1;
    grid_.assign(static_cast<std::size_t>(width_) * height_ * 2, -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        grid_[(static_cast<std::size_t>(c.s - s_lo_) * height_ + (c.y - y_lo_)) * 2 + (c.o == Orient::right)] = static_cast<int>(i);
    }
}

std::vector<Cell> hexagon_cells(int n, int m) {
    std::vector<Cell> out;
    const int reach = 2 * m + n;
    for (int s = -n; s < n; ++s) {
        for (int y = -reach - 1; y <= reach + 1; ++y) {
            for (Orient o : {Orient::left, Orient::right}) {
                Cell c{s, y, o};
                // right cells sit with their vertical edge on line s
                int edge_line = o == Orient::right ? s : s + 1;
                if (!parity_ok(y + 1, edge_line, n)) continue;
                bool inside = true;
                for (auto [x, vy] : vertices(c)) {
                    if (x < -n || x > n || std::abs(vy) > reach - std::abs(x)) inside = false;
                }
                if (inside) out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> hole_cells(int x, bool right_pointing) {
    if (right_pointing) {
        return {{x, -1, Orient::right}, {x, 1, Orient::right}, {x, 0, Orient::left}, {x + 1, 0, Orient::right}};
    }
    return {{x - 1, -1, Orient::left}, {x - 1, 1, Orient::left}, {x - 1, 0, Orient::right}, {x - 2, 0, Orient::left}};
}

Cell unit_hole(int x, bool right_pointing, Part half) {
    int y = half == Part::upper ? 1 : -1;
    return right_pointing ? Cell{x, y, Orient::right} : Cell{x - 1, y, Orient::left};
}

std::pair<Cell, Cell> axis_rhombus(int x, bool right_pointing) {
    if (right_pointing) return {Cell{x, 0, Orient::left}, Cell{x + 1, 0, Orient::right}};
    return {Cell{x - 2, 0, Orient::left}, Cell{x - 1, 0, Orient::right}};
}

bool below_cut(const Cell& c, int n) {
    for (auto [x, y] : vertices(c)) {
        int cut = ((x - n) % 2 == 0) ? 0 : -1;
        if (y > cut) return false;
    }
    return true;
}

bool is_fold(const Cell& a, const Cell& b, int n) {
    const Cell& l = a.o == Orient::left ? a : b;
    const Cell& r = a.o == Orient::left ? b : a;
    if (l.o != Orient::left || r.o != Orient::right) return false;
    return l.y == 0 && ((l.s + n) % 2 == 0) && r.s == l.s && r.y == 1;
}

bool free_half_allowed(const RegionSpec& spec) {
    std::vector<int> mirrored;
    for (int l : spec.left) mirrored.push_back(-l);
    std::sort(mirrored.begin(), mirrored.end());
    if (mirrored != spec.right) return false;
    return std::all_of(spec.right.begin(), spec.right.end(), [](int r) { return r > 0; });
}

TriangularRegion region_from_cells(std::vector<Cell> cells, Part kind, int n, int m) {
    TriangularRegion reg;
    reg.kind = kind;
    reg.n = n;
    reg.m = m;
    reg.cells = std::move(cells);
    reg.reindex();
    return reg;
}

TriangularRegion build_region(const RegionSpec& spec, Part kind) {
    std::vector<Cell> hex = hexagon_cells(spec.n, spec.m);
    std::set<Cell> removed;
    auto drop = [&](int x, bool right) {
        for (const auto& c : hole_cells(x, right)) {
            if (!std::binary_search(hex.begin(), hex.end(), c))
                throw std::domain_error("hole cell " + to_string(c) + " lies outside the hexagon");
            removed.insert(c);
        }
    };
    for (int l : spec.left) drop(l, false);
    for (int r : spec.right) drop(r, true);

    std::vector<Cell> keep;
    for (const auto& c : hex) {
        if (removed.count(c)) continue;
        switch (kind) {
            case Part::full: keep.push_back(c); break;
            case Part::lower: if (below_cut(c, spec.n)) keep.push_back(c); break;
            case Part::upper: if (!below_cut(c, spec.n)) keep.push_back(c); break;
            case Part::free_half: {
                bool west = true;
                for (auto [x, y] : vertices(c)) if (x > 0) west = false;
                if (west) keep.push_back(c);
                break;
            }
        }
    }
    if (kind == Part::free_half && !free_half_allowed(spec))
        throw std::invalid_argument("free_half needs R = -L with every r > 0");
    TriangularRegion reg = region_from_cells(std::move(keep), kind, spec.n, spec.m);
    if (kind == Part::free_half) {
        for (std::size_t i = 0; i < reg.cells.size(); ++i) {
            const auto& c = reg.cells[i];
            reg.free[i] = c.o == Orient::left && c.s == -1;
        }
    }
    return reg;
}

}  // namespace holey
