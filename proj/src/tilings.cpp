#include "holey/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace holey {

void Tiling::normalise() {
    for (auto& r : rhombi)
        if (r.second < r.first) std::swap(r.first, r.second);
    std::sort(rhombi.begin(), rhombi.end());
}

bool is_tiling_of(const Tiling& t, const TriangularRegion& region) {
    std::vector<int> hits(region.size(), 0);
    for (const auto& [a, b] : t.rhombi) {
        int ia = region.index(a), ib = region.index(b);
        if (ia < 0 || ib < 0 || ia == ib) return false;
        bool adjacent = false;
        for (Edge e : kEdges) adjacent = adjacent || neighbour(a, e) == b;
        if (!adjacent) return false;
        ++hits[ia];
        ++hits[ib];
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] > 1) return false;
        if (hits[i] == 0 && !region.free[i]) return false;
    }
    return true;
}

namespace {

struct Links {
    std::vector<std::vector<std::pair<int, int>>> later;  // (offset, weight)
};

Links forward_links(const TriangularRegion& region, TileWeight weight) {
    Links links;
    links.later.resize(region.size());
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Cell& c = region.cells[i];
        for (Edge e : kEdges) {
            int j = region.index(neighbour(c, e));
            if (j <= static_cast<int>(i)) continue;
            int off = j - static_cast<int>(i);
            if (off >= 64) throw std::runtime_error("transfer frontier wider than 64 cells");
            int w = weight == TileWeight::folds && is_fold(c, region.cells[j], region.n) ? 2 : 1;
            links.later[i].emplace_back(off, w);
        }
    }
    return links;
}

// Adds w * v into slot; false on 64-bit overflow.
inline bool accumulate(std::uint64_t& slot, std::uint64_t v, int w) {
    if (w == 2 && __builtin_mul_overflow(v, std::uint64_t{2}, &v)) return false;
    return !__builtin_add_overflow(slot, v, &slot);
}

inline bool accumulate(Integer& slot, const Integer& v, int w) {
    if (w == 2) slot += 2 * v;
    else slot += v;
    return true;
}

template <class Count>
bool transfer(const TriangularRegion& region, const Links& links, Count& result) {
    std::unordered_map<std::uint64_t, Count> states{{0, Count(1)}}, next;
    for (std::size_t i = 0; i < region.size(); ++i) {
        next.clear();
        next.reserve(states.size() * 2);
        for (const auto& [mask, v] : states) {
            if (mask & 1) {
                if (!accumulate(next[mask >> 1], v, 1)) return false;
                continue;
            }
            if (region.free[i] && !accumulate(next[mask >> 1], v, 1)) return false;
            for (auto [off, w] : links.later[i]) {
                if (mask >> off & 1) continue;
                if (!accumulate(next[(mask | (std::uint64_t{1} << off)) >> 1], v, w)) return false;
            }
        }
        states.swap(next);
    }
    auto it = states.find(0);
    result = it == states.end() ? Count(0) : it->second;
    return true;
}

}  // namespace

Integer count_tilings(const TriangularRegion& region, TileWeight weight) {
    if (region.size() == 0) return 1;
    Links links = forward_links(region, weight);
    std::uint64_t small = 0;
    if (transfer(region, links, small)) {
        Integer out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof small, 0, 0, &small);
        return out;
    }
    Integer big;
    transfer(region, links, big);
    return big;
}

std::uint64_t for_each_matching(const TriangularRegion& region,
                                const std::function<bool(const std::vector<int>&)>& visit,
                                std::uint64_t budget) {
    const int N = static_cast<int>(region.size());
    std::vector<std::vector<int>> nbr(N);
    for (int i = 0; i < N; ++i)
        for (Edge e : kEdges) {
            int j = region.index(neighbour(region.cells[i], e));
            if (j >= 0) nbr[i].push_back(j);
        }
    std::vector<int> partner(N, -1);
    std::uint64_t found = 0, nodes = 0;
    bool stop = false;
    std::function<void(int)> rec = [&](int from) {
        if (stop) return;
        if (++nodes > budget) throw BudgetExceeded("tiling search budget exceeded", nodes);
        int i = from;
        while (i < N && partner[i] >= 0) ++i;
        if (i == N) {
            ++found;
            if (!visit(partner)) stop = true;
            return;
        }
        for (int j : nbr[i]) {
            if (partner[j] >= 0) continue;
            partner[i] = j;
            partner[j] = i;
            rec(i + 1);
            partner[i] = partner[j] = -1;
            if (stop) return;
        }
        if (region.free[i]) {
            partner[i] = i;
            rec(i + 1);
            partner[i] = -1;
        }
    };
    rec(0);
    return found;
}

std::uint64_t for_each_tiling(const TriangularRegion& region, const std::function<bool(const Tiling&)>& visit,
                              std::uint64_t budget) {
    return for_each_matching(
        region,
        [&](const std::vector<int>& partner) {
            Tiling t;
            for (std::size_t i = 0; i < partner.size(); ++i)
                if (partner[i] > static_cast<int>(i)) t.rhombi.emplace_back(region.cells[i], region.cells[partner[i]]);
            return visit(t);
        },
        budget);
}

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::uint64_t budget) {
    std::vector<Tiling> out;
    for_each_tiling(region, [&](const Tiling& t) { out.push_back(t); return true; }, budget);
    return out;
}

int fold_count(const Tiling& t, int n) {
    int k = 0;
    for (const auto& [a, b] : t.rhombi) k += is_fold(a, b, n);
    return k;
}

Integer count_symmetric(const RegionSpec& spec, Axis axis, std::uint64_t budget) {
    if (axis == Axis::vertical) {
        std::vector<int> mirrored;
        for (int l : spec.left) mirrored.push_back(-l);
        std::sort(mirrored.begin(), mirrored.end());
        if (mirrored != spec.right) throw std::invalid_argument("vertical symmetry needs R = -L");
    }
    TriangularRegion region = build_region(spec, Part::full);
    const int N = static_cast<int>(region.size());
    std::vector<int> mirror(N), partner(N, -1);
    std::vector<std::vector<int>> nbr(N);
    for (int i = 0; i < N; ++i) {
        const Cell& c = region.cells[i];
        mirror[i] = region.index(axis == Axis::vertical ? mirror_vertical(c) : mirror_horizontal(c));
        if (mirror[i] < 0) throw std::logic_error("region is not symmetric");
        for (Edge e : kEdges) {
            int j = region.index(neighbour(c, e));
            if (j >= 0) nbr[i].push_back(j);
        }
    }
    std::uint64_t found = 0, nodes = 0;
    std::function<void(int)> rec = [&](int from) {
        if (++nodes > budget) throw BudgetExceeded("symmetric tiling search budget exceeded", nodes);
        int i = from;
        while (i < N && partner[i] >= 0) ++i;
        if (i == N) {
            ++found;
            return;
        }
        for (int j : nbr[i]) {
            if (partner[j] >= 0) continue;
            int mi = mirror[i], mj = mirror[j];
            bool self = (mi == i && mj == j) || (mi == j && mj == i);
            if (!self) {
                if (mi == i || mi == j || mj == i || mj == j) continue;
                if (partner[mi] >= 0 || partner[mj] >= 0) continue;
            }
            partner[i] = j;
            partner[j] = i;
            if (!self) {
                partner[mi] = mj;
                partner[mj] = mi;
            }
            rec(i + 1);
            partner[i] = partner[j] = -1;
            if (!self) partner[mi] = partner[mj] = -1;
        }
    };
    rec(0);
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof found, 0, 0, &found);
    return out;
}

Integer count_free_boundary(int n, int m, const std::vector<int>& left) {
    std::vector<int> right;
    for (int l : left) right.push_back(-l);
    RegionSpec spec = make_spec(n, m, left, right);
    return count_tilings(build_region(spec, Part::free_half));
}

}  // namespace holey
