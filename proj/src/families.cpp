#include "holey/oracle.hpp"

#include <algorithm>

namespace holey {

namespace {

class FamilySearch {
public:
    FamilySearch(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends, Constraint c,
                 std::uint64_t budget, bool keep)
        : starts_(starts), ends_(ends), constraint_(c), budget_(budget), keep_(keep) {
        if (starts.size() != ends.size()) throw std::invalid_argument("starts and ends differ in number");
        if (starts.empty()) return;
        x0_ = x1_ = starts[0].x;
        y0_ = y1_ = starts[0].y;
        for (const auto* set : {&starts, &ends})
            for (const auto& p : *set) {
                x0_ = std::min(x0_, p.x);
                x1_ = std::max(x1_, p.x);
                y0_ = std::min(y0_, p.y);
                y1_ = std::max(y1_, p.y);
            }
        w_ = x1_ - x0_ + 1;
        h_ = y1_ - y0_ + 1;
        taken_.assign(static_cast<std::size_t>(w_ * h_), 0);
        end_at_.assign(static_cast<std::size_t>(w_ * h_), -1);
        used_.assign(ends.size(), false);
        for (std::size_t k = 0; k < ends.size(); ++k) end_at_[slot(ends[k].x, ends[k].y)] = static_cast<int>(k);
        for (const auto& s : starts) taken_[slot(s.x, s.y)] = 1;
        current_.resize(starts.size());
    }

    void run() {
        if (starts_.empty()) {
            record(0);
            return;
        }
        for (const auto& s : starts_)
            if (!allowed(s.x, s.y)) return;
        begin(0, 0);
    }

    Integer total() const {
        Integer sum = 0;
        for (std::size_t t = 0; t < by_touches_.size(); ++t) {
            if (!by_touches_[t]) continue;
            Integer term = by_touches_[t];
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), t);
            sum += term;
        }
        return sum;
    }

    std::vector<PathFamily> families;

private:
    std::size_t slot(long x, long y) const { return static_cast<std::size_t>((x - x0_) * h_ + (y - y0_)); }

    bool allowed(long x, long y) const {
        if (constraint_ == Constraint::avoid_diagonal) return x > y;
        if (constraint_ == Constraint::weighted_below) return x >= y;
        return true;
    }

    int touch(long x, long y) const { return constraint_ == Constraint::weighted_below && x == y ? 1 : 0; }

    void record(int touches) {
        if (by_touches_.size() <= static_cast<std::size_t>(touches)) by_touches_.resize(touches + 1, 0);
        ++by_touches_[touches];
        if (keep_) {
            PathFamily f;
            f.paths = current_;
            mpz_mul_2exp(f.weight.get_mpz_t(), Integer(1).get_mpz_t(), static_cast<unsigned long>(touches));
            families.push_back(std::move(f));
        }
    }

    void begin(std::size_t k, int touches) {
        const auto& s = starts_[k];
        current_[k].assign(1, s);
        int t = touches + touch(s.x, s.y);
        // a start sitting on an end can only be the trivial path
        int e = end_at_[slot(s.x, s.y)];
        if (e >= 0) {
            if (used_[e]) return;
            used_[e] = true;
            if (k + 1 == starts_.size()) record(t);
            else begin(k + 1, t);
            used_[e] = false;
            return;
        }
        walk(k, s.x, s.y, t);
    }

    bool reachable(long x, long y) const {
        for (std::size_t e = 0; e < ends_.size(); ++e)
            if (!used_[e] && ends_[e].x >= x && ends_[e].y >= y) return true;
        return false;
    }

    void walk(std::size_t k, long x, long y, int touches) {
        if (++nodes_ > budget_) throw BudgetExceeded("path family search budget exceeded", nodes_);
        if (!reachable(x, y)) return;
        const long steps[2][2] = {{1, 0}, {0, 1}};
        for (const auto& d : steps) {
            long nx = x + d[0], ny = y + d[1];
            if (nx > x1_ || ny > y1_) continue;
            std::size_t at = slot(nx, ny);
            if (taken_[at] || !allowed(nx, ny)) continue;
            int t = touches + touch(nx, ny);
            taken_[at] = 1;
            current_[k].push_back({nx, ny});
            int e = end_at_[at];
            if (e >= 0) {
                used_[e] = true;
                if (k + 1 == starts_.size()) record(t);
                else begin(k + 1, t);
                used_[e] = false;
            } else {
                walk(k, nx, ny, t);
            }
            current_[k].pop_back();
            taken_[at] = 0;
        }
    }

    const std::vector<LatticePoint>& starts_;
    const std::vector<LatticePoint>& ends_;
    Constraint constraint_;
    std::uint64_t budget_;
    bool keep_;
    long x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0, w_ = 0, h_ = 0;
    std::vector<char> taken_;
    std::vector<int> end_at_;
    std::vector<bool> used_;
    std::vector<std::vector<LatticePoint>> current_;
    std::vector<std::uint64_t> by_touches_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

Integer count_families(const std::vector<LatticePoint>& starts, const std::vector<LatticePoint>& ends,
                       Constraint constraint, std::uint64_t budget) {
    FamilySearch search(starts, ends, constraint, budget, false);
    search.run();
    return search.total();
}

std::vector<PathFamily> enumerate_families(const std::vector<LatticePoint>& starts,
                                           const std::vector<LatticePoint>& ends, Constraint constraint,
                                           std::uint64_t budget) {
    FamilySearch search(starts, ends, constraint, budget, true);
    search.run();
    return std::move(search.families);
}

Integer family_weight(const PathFamily& family, Constraint constraint) {
    Integer w = 1;
    if (constraint != Constraint::weighted_below) return w;
    for (const auto& path : family.paths)
        for (const auto& p : path)
            if (p.x == p.y) w *= 2;
    return w;
}

}  // namespace holey
