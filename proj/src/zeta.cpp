#include "holey/zeta.hpp"

#include <algorithm>

namespace holey {

HolePairing pair_holes(const std::vector<int>& right, const std::vector<int>& left) {
    if (right.size() != left.size()) throw std::invalid_argument("pairing needs |R| = |L|");
    std::vector<std::pair<int, bool>> items;
    for (int r : right) items.emplace_back(r, true);
    for (int l : left) items.emplace_back(l, false);
    std::sort(items.begin(), items.end());
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i].first == items[i - 1].first) throw std::invalid_argument("pairing needs distinct positions");
    HolePairing out;
    while (!items.empty()) {
        std::size_t i = 0;
        while (items[i].second == items[i + 1].second) ++i;
        out.pairs.push_back({items[i].first, items[i + 1].first, items[i].second, items[i + 1].second});
        items.erase(items.begin() + static_cast<long>(i), items.begin() + static_cast<long>(i) + 2);
    }
    return out;
}

std::vector<std::pair<Cell, Cell>> Ribbon::rhombi() const {
    std::vector<std::pair<Cell, Cell>> out;
    for (std::size_t i = 1; i + 2 < chain.size(); i += 2) out.emplace_back(chain[i], chain[i + 1]);
    return out;
}

ZetaState start_state(const Tiling& tiling, const RegionSpec& spec, Part half) {
    if (half != Part::lower && half != Part::upper) throw std::invalid_argument("zeta acts on lower or upper halves");
    ZetaState st;
    st.n = spec.n;
    st.half = half;
    TriangularRegion region = build_region(spec, half);
    st.cells.insert(region.cells.begin(), region.cells.end());
    auto link = [&](const Cell& a, const Cell& b) {
        st.partner[a] = b;
        st.partner[b] = a;
    };
    for (const auto& [a, b] : tiling.rhombi) link(a, b);
    if (half == Part::upper) {
        for (int l : spec.left) {
            auto [a, b] = axis_rhombus(l, false);
            link(a, b);
            st.cells.insert(a);
            st.cells.insert(b);
        }
        for (int r : spec.right) {
            auto [a, b] = axis_rhombus(r, true);
            link(a, b);
            st.cells.insert(a);
            st.cells.insert(b);
        }
    }
    for (int l : spec.left) st.pending.insert(unit_hole(l, false, half));
    for (int r : spec.right) st.pending.insert(unit_hole(r, true, half));
    return st;
}

namespace {

struct Walk {
    std::vector<Cell> cells;  // entered cell, its partner, entered cell, ...; a final hole cell if reached
    bool reached_hole = false;
};

// Cross rhombi from the given cell: enter through the edge in direction e,
// leave through the opposite parallel edge of the partner.
Walk walk(const ZetaState& st, const Cell& from, Edge e) {
    Walk w;
    Cell c = from;
    for (;;) {
        Cell next = neighbour(c, e);
        if (st.pending.count(next)) {
            w.cells.push_back(next);
            w.reached_hole = true;
            return w;
        }
        if (!st.cells.count(next)) return w;
        auto it = st.partner.find(next);
        if (it == st.partner.end()) {
            w.cells.push_back(next);
            w.reached_hole = true;
            return w;
        }
        w.cells.push_back(next);
        w.cells.push_back(it->second);
        c = it->second;
        if (w.cells.size() > 4 * st.cells.size()) throw std::logic_error("rhombus path does not terminate");
    }
}

}  // namespace

Ribbon propagation_path(const ZetaState& st, const HolePair& pair) {
    Ribbon rb;
    rb.start = unit_hole(pair.first, pair.first_right, st.half);
    rb.finish = unit_hole(pair.second, pair.second_right, st.half);
    if (!st.pending.count(rb.start) || !st.pending.count(rb.finish))
        throw std::invalid_argument("pair holes are not open in this state");
    rb.chain.push_back(rb.start);
    if (!pair.first_right) {
        Walk w = walk(st, rb.start, Edge::vertical);
        if (!w.reached_hole || w.cells.back() != rb.finish)
            throw ClaimViolated("propagation path claim violated: vertical path from " + to_string(rb.start) +
                                " ends at " + (w.reached_hole ? to_string(w.cells.back()) : std::string("the boundary")));
        rb.chain.insert(rb.chain.end(), w.cells.begin(), w.cells.end());
        return rb;
    }
    Edge from_first = st.half == Part::lower ? Edge::rising : Edge::falling;
    Edge from_second = st.half == Part::lower ? Edge::falling : Edge::rising;
    Walk a = walk(st, rb.start, from_first);
    Walk b = walk(st, rb.finish, from_second);
    auto rhombus_list = [](const Walk& w) {
        std::vector<std::pair<Cell, Cell>> out;
        for (std::size_t i = 0; i + 1 < w.cells.size(); i += 2)
            out.emplace_back(std::min(w.cells[i], w.cells[i + 1]), std::max(w.cells[i], w.cells[i + 1]));
        return out;
    };
    auto ra = rhombus_list(a), rbs = rhombus_list(b);
    std::vector<std::pair<std::size_t, std::size_t>> common;
    for (std::size_t i = 0; i < ra.size(); ++i)
        for (std::size_t j = 0; j < rbs.size(); ++j)
            if (ra[i] == rbs[j]) common.emplace_back(i, j);
    if (common.size() != 1)
        throw ClaimViolated("propagation path claim violated: boundary paths from " + to_string(rb.start) + " and " +
                            to_string(rb.finish) + " share " + std::to_string(common.size()) + " rhombi");
    auto [k, j] = common.front();
    if (a.cells[2 * k] == b.cells[2 * j])
        throw ClaimViolated("propagation path claim violated: both paths enter the common rhombus through one cell");
    rb.chain.insert(rb.chain.end(), a.cells.begin(), a.cells.begin() + static_cast<long>(2 * k + 1));
    for (std::size_t t = 2 * j + 1; t-- > 0;) rb.chain.push_back(b.cells[t]);
    rb.chain.push_back(rb.finish);
    return rb;
}

void transmit(ZetaState& st, const Ribbon& ribbon) {
    const auto& ch = ribbon.chain;
    if (ch.size() < 2 || ch.size() % 2 || ch.front() != ribbon.start || ch.back() != ribbon.finish)
        throw std::invalid_argument("malformed ribbon");
    for (std::size_t i = 0; i + 1 < ch.size(); i += 2) {
        bool adjacent = false;
        for (Edge e : kEdges) adjacent = adjacent || neighbour(ch[i], e) == ch[i + 1];
        if (!adjacent) throw std::invalid_argument("malformed ribbon: cells " + to_string(ch[i]) + " and " +
                                                   to_string(ch[i + 1]) + " do not share an edge");
    }
    for (std::size_t i = 0; i + 1 < ch.size(); i += 2) {
        st.partner[ch[i]] = ch[i + 1];
        st.partner[ch[i + 1]] = ch[i];
    }
    st.cells.insert(ribbon.start);
    st.cells.insert(ribbon.finish);
    st.pending.erase(ribbon.start);
    st.pending.erase(ribbon.finish);
}

Tiling to_tiling(const ZetaState& st) {
    Tiling t;
    for (const auto& [a, b] : st.partner)
        if (a < b) t.rhombi.emplace_back(a, b);
    t.normalise();
    return t;
}

ZetaResult zeta(const Tiling& tiling, const RegionSpec& spec, Part half) {
    ZetaState st = start_state(tiling, spec, half);
    ZetaResult out;
    for (const HolePair& pair : pair_holes(spec.right, spec.left).pairs) {
        Ribbon rb = propagation_path(st, pair);
        transmit(st, rb);
        out.ribbons.push_back(std::move(rb));
    }
    out.image = to_tiling(st);
    return out;
}

InjectionReport verify_injection(const RegionSpec& spec, Part half, std::uint64_t budget) {
    InjectionReport rep;
    rep.spec = spec;
    rep.half = half;
    TriangularRegion holey_region = build_region(spec, half);
    TriangularRegion target = build_region(make_spec(spec.n, spec.m, {}, {}), half);
    std::set<std::vector<std::pair<Cell, Cell>>> images;
    for_each_tiling(
        holey_region,
        [&](const Tiling& t) {
            ++rep.tilings;
            ZetaResult res;
            try {
                res = zeta(t, spec, half);
            } catch (const ClaimViolated& e) {
                if (rep.path_failures++ == 0) rep.first_failure = e.what();
                return true;
            }
            if (!is_tiling_of(res.image, target)) rep.valid_images = false;
            images.insert(res.image.rhombi);

            std::set<Cell> on_ribbon;
            for (const auto& rb : res.ribbons)
                for (const Cell& c : rb.chain)
                    if (!on_ribbon.insert(c).second) rep.disjoint_ok = false;
            ZetaState before = start_state(t, spec, half);
            std::map<Cell, Cell> after;
            for (const auto& [a, b] : res.image.rhombi) {
                after[a] = b;
                after[b] = a;
            }
            for (const auto& [a, b] : before.partner)
                if (!on_ribbon.count(a) && after[a] != b) rep.locality_ok = false;

            if (half == Part::upper && fold_count(to_tiling(before), spec.n) > fold_count(res.image, spec.n))
                ++rep.weight_violations;
            return true;
        },
        budget);
    rep.distinct_images = images.size();
    rep.ok = rep.path_failures == 0 && rep.valid_images && rep.distinct_images == rep.tilings;
    return rep;
}

}  // namespace holey
