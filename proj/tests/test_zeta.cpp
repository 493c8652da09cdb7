#include "holey/zeta.hpp"

#include <doctest.h>

#include <string>

using namespace holey;

namespace {

bool same(const HolePair& p, int a, int b) { return p.first == a && p.second == b; }

std::set<std::pair<Cell, Cell>> as_set(const Tiling& t) {
    Tiling u = t;
    u.normalise();
    return {u.rhombi.begin(), u.rhombi.end()};
}

std::pair<Cell, Cell> ordered(Cell a, Cell b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

TEST_CASE("hole pairing") {
    auto fig = pair_holes({-2, 2}, {-6, 6});
    REQUIRE(fig.pairs.size() == 2);
    CHECK(same(fig.pairs[0], -6, -2));
    CHECK(same(fig.pairs[1], 2, 6));
    CHECK_FALSE(fig.pairs[0].first_right);
    CHECK(fig.pairs[0].second_right);

    auto one = pair_holes({2}, {0});
    REQUIRE(one.pairs.size() == 1);
    CHECK(same(one.pairs[0], 0, 2));

    auto nested = pair_holes({0, 2}, {4, 6});
    REQUIRE(nested.pairs.size() == 2);
    CHECK(same(nested.pairs[0], 2, 4));
    CHECK(same(nested.pairs[1], 0, 6));

    CHECK(pair_holes({}, {}).pairs.empty());
    CHECK_THROWS(pair_holes({0}, {}));
    CHECK_THROWS(pair_holes({0}, {0}));
}

TEST_CASE("pairings are complete, bicoloured and non-crossing") {
    for (const RegionSpec& s : enumerate_specs(12, 1, 3)) {
        auto pairs = pair_holes(s.right, s.left).pairs;
        CHECK(pairs.size() == s.left.size());
        std::multiset<int> seen;
        for (const auto& p : pairs) {
            CHECK(p.first < p.second);
            CHECK(p.first_right != p.second_right);
            seen.insert(p.first);
            seen.insert(p.second);
        }
        std::multiset<int> all(s.left.begin(), s.left.end());
        all.insert(s.right.begin(), s.right.end());
        CHECK(seen == all);
        for (const auto& a : pairs)
            for (const auto& b : pairs) {
                bool crossing = a.first < b.first && b.first < a.second && a.second < b.second;
                CHECK_FALSE(crossing);
            }
    }
}

TEST_CASE("single pair instance is injective") {
    InjectionReport r = verify_injection(make_spec(4, 1, {0}, {2}), Part::lower);
    CHECK(r.tilings == 4);
    CHECK(r.ok);
    CHECK(r.locality_ok);
    CHECK(r.disjoint_ok);
}

TEST_CASE("unholed spec maps every tiling to itself") {
    RegionSpec s = make_spec(4, 1, {}, {});
    for (Part h : {Part::lower, Part::upper}) {
        TriangularRegion r = build_region(s, h);
        for (const Tiling& t : enumerate_tilings(r)) {
            ZetaResult z = zeta(t, s, h);
            CHECK(z.ribbons.empty());
            CHECK(as_set(z.image) == as_set(t));
        }
        InjectionReport rep = verify_injection(s, h);
        CHECK(rep.ok);
        CHECK(rep.weight_ok());
    }
}

TEST_CASE("ribbons grow by one rhombus under transmission") {
    for (const RegionSpec& s : {make_spec(4, 1, {0}, {2}), make_spec(6, 1, {-2}, {2}), make_spec(6, 2, {-4, 2}, {-2, 4})})
        for (Part h : {Part::lower, Part::upper})
            for_each_tiling(build_region(s, h), [&](const Tiling& t) {
                ZetaResult z = zeta(t, s, h);
                auto image = as_set(z.image);
                auto before = as_set(to_tiling(start_state(t, s, h)));
                for (const Ribbon& rb : z.ribbons) {
                    REQUIRE(rb.chain.size() % 2 == 0);
                    std::size_t k = rb.rhombi().size();
                    CHECK(rb.chain.size() == 2 * k + 2);
                    for (const auto& [a, b] : rb.rhombi()) CHECK(before.count(ordered(a, b)) == 1);
                    std::size_t after = 0;
                    for (std::size_t i = 0; i + 1 < rb.chain.size(); i += 2)
                        after += image.count(ordered(rb.chain[i], rb.chain[i + 1]));
                    CHECK(after == k + 1);
                }
                return true;
            });
}

TEST_CASE("malformed ribbons are rejected") {
    RegionSpec s = make_spec(4, 1, {0}, {2});
    Tiling t = enumerate_tilings(build_region(s, Part::lower)).front();
    ZetaState st = start_state(t, s, Part::lower);
    Ribbon rb = propagation_path(st, pair_holes(s.right, s.left).pairs.front());
    Ribbon broken = rb;
    broken.chain.pop_back();
    CHECK_THROWS(transmit(st, broken));
    Ribbon gap = rb;
    std::swap(gap.chain[0], gap.chain[1]);
    CHECK_THROWS(transmit(st, gap));
    CHECK_THROWS(start_state(t, s, Part::full));
}

TEST_CASE("images are valid, local and use disjoint ribbons") {
    for (const RegionSpec& s : enumerate_specs(6, 2, 2))
        for (Part h : {Part::lower, Part::upper}) {
            if (s.holes() == 0) continue;
            InjectionReport r = verify_injection(s, h);
            INFO(s.str(), " ", part_name(h), " ", r.first_failure);
            CHECK(r.path_failures == 0);
            CHECK(r.valid_images);
            CHECK(r.locality_ok);
            CHECK(r.disjoint_ok);
        }
}

namespace {

struct Failures {
    int count = 0;
    std::string examples;
};

}  // namespace

TEST_CASE("distinct tilings have distinct images") {
    Failures f;
    for (const RegionSpec& s : enumerate_specs(6, 2, 2)) {
        if (s.holes() == 0) continue;
        InjectionReport r = verify_injection(s, Part::lower);
        if (r.distinct_images != r.tilings && f.count++ < 5)
            f.examples += "\n  " + s.str() + ": " + std::to_string(r.tilings) + " tilings, " +
                          std::to_string(r.distinct_images) + " images";
    }
    INFO("non-injective specs: ", f.count, f.examples);
    CHECK(f.count == 0);
}

TEST_CASE("upper map never lowers the fold count") {
    Failures f;
    for (const RegionSpec& s : enumerate_specs(6, 2, 2)) {
        if (s.holes() == 0) continue;
        InjectionReport r = verify_injection(s, Part::upper);
        if (!r.weight_ok() && f.count++ < 5)
            f.examples += "\n  " + s.str() + ": " + std::to_string(r.weight_violations) + " of " +
                          std::to_string(r.tilings) + " tilings lose folds";
    }
    INFO("specs with fold losses: ", f.count, f.examples);
    CHECK(f.count == 0);
}
