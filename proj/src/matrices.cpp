#include "holey/matrices.hpp"

#include <algorithm>

namespace holey {

ExactMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
    ExactMatrix M(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) M(i, j) = rows[i][j];
    }
    return M;
}

Rational det_exact(const ExactMatrix& M) {
    const std::size_t n = M.order();
    if (n == 0) return 1;
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = M(i, j).get_num() * (l / M(i, j).get_den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    Integer prev = 1;
    int flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            ++flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Rational out(at(n - 1, n - 1), scale);
    out.canonicalize();
    return flips % 2 ? Rational(-out) : out;
}

Integer path_count(const LatticePoint& from, const LatticePoint& to, PathVariant variant) {
    auto plain = [](const LatticePoint& a, const LatticePoint& b) {
        long e = b.x - a.x, up = b.y - a.y;
        if (e < 0 || up < 0) return Integer(0);
        return binomial(e + up, e);
    };
    const LatticePoint swapped{to.y, to.x};
    switch (variant) {
        case PathVariant::plain: return plain(from, to);
        case PathVariant::avoid_diagonal: return plain(from, to) - plain(from, swapped);
        case PathVariant::weighted_below: return plain(from, to) + plain(from, swapped);
    }
    return 0;
}

namespace {

PathVariant variant_for(Part half) {
    if (half == Part::lower) return PathVariant::avoid_diagonal;
    if (half == Part::upper) return PathVariant::weighted_below;
    throw std::invalid_argument("path matrices exist for the lower and upper halves only");
}

int hole_value(const std::vector<int>& xs, long index, long m) {
    long k = index - m - 1;
    if (k < 0 || k >= static_cast<long>(xs.size())) throw std::out_of_range("hole index out of range");
    return xs[static_cast<std::size_t>(k)];
}

}  // namespace

Integer q_entry(const RegionSpec& spec, Part half, std::size_t i, std::size_t j) {
    PointSets pts = lgv_points(spec, half);
    return path_count(pts.starts.at(i), pts.ends.at(j), variant_for(half));
}

ExactMatrix build_Q(const RegionSpec& spec, Part half) {
    PointSets pts = lgv_points(spec, half);
    PathVariant v = variant_for(half);
    ExactMatrix Q(pts.starts.size());
    for (std::size_t i = 0; i < pts.starts.size(); ++i)
        for (std::size_t j = 0; j < pts.ends.size(); ++j) Q(i, j) = path_count(pts.starts[i], pts.ends[j], v);
    return Q;
}

Rational lu_entry(LuFactor name, long i, long j, const RegionSpec& spec, Part half) {
    const long n = spec.n, m = spec.m;
    const bool primed = half == Part::upper;
    if (half != Part::lower && half != Part::upper) throw std::invalid_argument("LU factors exist for lower/upper only");
    auto sgn = [](long k) { return k % 2 ? Rational(1) : Rational(-1); };  // (-1)^(k+1)
    switch (name) {
        case LuFactor::A:
            if (primed) return gamma_ratio({n + 1, i + j - 1, 2 * j + n}, {2 * j - 1, i - j + 1, j - i + n + 1, i + j + n});
            return gamma_ratio({2 * i, n + 1, i + j - 1, 2 * j + n}, {2 * i - 1, 2 * j, i - j + 1, j - i + n + 1, i + j + n});
        case LuFactor::C:
            if (primed) return gamma_ratio({n + 1, i + j - 1, 2 * i + 2 * n}, {j - i + 1, 2 * i + n - 1, i - j + n + 1, i + j + n});
            return gamma_ratio({2 * j, n + 1, i + j - 1, 2 * i + 2 * n - 1},
                               {2 * j - 1, j - i + 1, 2 * i + n - 1, i - j + n + 1, i + j + n});
        case LuFactor::B: {
            const long l = hole_value(spec.left, i, m);
            if (primed)
                return sgn(j) * gamma_ratio({j + n, 2 * j + n, n - l + 2, j + l / 2 + n / 2 - 1},
                                            {j, 2 * j + 2 * n, n / 2 - l / 2 + 1, l / 2 + n / 2, j - l / 2 + n / 2 + 1});
            return sgn(j) * gamma_ratio({j + n - 1, 2 * j + n, n - l + 1, j + l / 2 + n / 2 - 1},
                                        {j, 2 * j + 2 * n - 2, n / 2 - l / 2 + 1, l / 2 + n / 2, j - l / 2 + n / 2 + 1}) / 2;
        }
        case LuFactor::D: {
            const long r = hole_value(spec.right, j, m);
            if (primed)
                return sgn(i) * gamma_ratio({2 * i - 1, i + n, n + r + 2, i + n / 2 - r / 2 - 1},
                                            {i, 2 * i + n - 1, n / 2 - r / 2, n / 2 + r / 2 + 1, i + n / 2 + r / 2 + 1});
            return sgn(i) * gamma_ratio({2 * i + 1, i + n, n + r + 1, i + n / 2 - r / 2 - 1},
                                        {2 * i + n - 1, i + 1, n / 2 - r / 2, n / 2 + r / 2 + 1, i + n / 2 + r / 2 + 1}) / 2;
        }
    }
    throw std::logic_error("unreachable");
}

LuReport verify_lu(const RegionSpec& spec, Part half, const std::optional<LuPerturbation>& perturb) {
    const long m = spec.m, p = spec.holes();
    ExactMatrix Q = build_Q(spec, half);
    auto entry = [&](LuFactor f, long i, long j) {
        Rational v = lu_entry(f, i, j, spec, half);
        if (perturb && perturb->factor == f && perturb->i == i && perturb->j == j) v += perturb->delta;
        return v;
    };
    LuReport rep;
    auto check = [&](const char* block, long i, long j, const Rational& got) {
        const Rational& want = Q(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (got == want) return true;
        rep = LuReport{false, block, i, j, want, got};
        return false;
    };
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= m; ++j) {
            Rational sum = 0;
            for (long s = 1; s <= std::min(i, j); ++s) sum += entry(LuFactor::A, i, s) * entry(LuFactor::C, s, j);
            if (!check("i", i, j, sum)) return rep;
        }
    for (long i = 1; i <= m; ++i)
        for (long j = m + 1; j <= m + p; ++j) {
            Rational sum = 0;
            for (long s = 1; s <= i; ++s) sum += entry(LuFactor::A, i, s) * entry(LuFactor::D, s, j);
            if (!check("ii", i, j, sum)) return rep;
        }
    for (long i = m + 1; i <= m + p; ++i)
        for (long j = 1; j <= m; ++j) {
            Rational sum = 0;
            for (long s = 1; s <= j; ++s) sum += entry(LuFactor::B, i, s) * entry(LuFactor::C, s, j);
            if (!check("iii", i, j, sum)) return rep;
        }
    return rep;
}

ExactMatrix build_E(const RegionSpec& spec, Part half) {
    const long m = spec.m;
    const std::size_t p = static_cast<std::size_t>(spec.holes());
    PointSets pts = lgv_points(spec, half);
    PathVariant v = variant_for(half);
    std::vector<std::vector<Rational>> B(p), D(p);
    for (std::size_t k = 0; k < p; ++k) {
        const long hole = m + 1 + static_cast<long>(k);
        for (long s = 1; s <= m; ++s) {
            B[k].push_back(lu_entry(LuFactor::B, hole, s, spec, half));
            D[k].push_back(lu_entry(LuFactor::D, s, hole, spec, half));
        }
    }
    ExactMatrix E(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Rational e = path_count(pts.starts[m + i], pts.ends[m + j], v);
            for (long s = 0; s < m; ++s) e -= B[i][s] * D[j][s];
            E(i, j) = e;
        }
    return E;
}

std::vector<Discrepancy> compare_closed_forms(const RegionSpec& spec, Part half, ClosedVariant variant) {
    std::vector<Discrepancy> out;
    ExactMatrix E = build_E(spec, half);
    for (std::size_t i = 0; i < E.order(); ++i)
        for (std::size_t j = 0; j < E.order(); ++j) {
            ClosedForm cf = closed_form_entry(spec, half, i, j, variant);
            if (!cf.defined || !cf.rational || cf.value != E(i, j)) out.push_back({spec, half, i, j, E(i, j), cf});
        }
    return out;
}

CountKind parse_count_kind(const std::string& name) {
    if (name == "lower") return CountKind::lower;
    if (name == "upper" || name == "upper_weighted") return CountKind::upper_weighted;
    if (name == "full") return CountKind::full;
    if (name == "free_half") return CountKind::free_half;
    throw std::invalid_argument("unknown count kind: " + name);
}

std::string count_kind_name(CountKind kind) {
    switch (kind) {
        case CountKind::lower: return "lower";
        case CountKind::upper_weighted: return "upper_weighted";
        case CountKind::full: return "full";
        case CountKind::free_half: return "free_half";
    }
    return "?";
}

HoleDeterminants hole_determinants(const RegionSpec& spec) {
    return {det_exact(build_E(spec, Part::lower)), det_exact(build_E(spec, Part::upper))};
}

namespace {

CountResult half_count(const RegionSpec& spec, Part half) {
    const bool lower = half == Part::lower;
    Rational detQ = det_exact(build_Q(spec, half));
    Rational detE = det_exact(build_E(spec, half));
    Integer pre = product_formula(lower ? Product::transpose_complement : Product::vertical_symmetric, spec.n, spec.m);
    Rational absQ = abs(detQ);
    Rational viaE = Rational(pre) * abs(detE);
    if (absQ != viaE)
        throw FormulaMismatch("|det Q| != prefactor * |det E| for " + spec.str() + " (" + part_name(half) + ")");
    if (!is_integer(absQ)) throw FormulaMismatch("non-integral determinant count for " + spec.str());
    CountResult res{spec, lower ? CountKind::lower : CountKind::upper_weighted, absQ.get_num(), {}};
    const std::string tag = lower ? "lower" : "upper";
    res.factors["det_Q_" + tag] = detQ;
    res.factors["det_E_" + tag] = detE;
    res.factors[lower ? "transpose_complement" : "vertical_symmetric"] = Rational(pre);
    return res;
}

}  // namespace

CountResult count_region(const RegionSpec& spec, CountKind kind) {
    switch (kind) {
        case CountKind::lower: return half_count(spec, Part::lower);
        case CountKind::upper_weighted: return half_count(spec, Part::upper);
        case CountKind::free_half: {
            if (!free_half_allowed(spec)) throw std::invalid_argument("free_half needs R = -L with every r > 0");
            CountResult res = half_count(spec, Part::upper);
            res.kind = CountKind::free_half;
            return res;
        }
        case CountKind::full: {
            CountResult lo = half_count(spec, Part::lower);
            CountResult up = half_count(spec, Part::upper);
            Integer product = lo.value * up.value;
            Integer box = product_formula(Product::box, spec.n, spec.m);
            Rational viaE = Rational(box) * lo.factors["det_E_lower"] * up.factors["det_E_upper"];
            if (viaE != Rational(product))
                throw FormulaMismatch("box * det E_lower * det E_upper != lower * upper for " + spec.str());
            CountResult res{spec, CountKind::full, product, {}};
            res.factors["box"] = Rational(box);
            res.factors["lower"] = Rational(lo.value);
            res.factors["upper_weighted"] = Rational(up.value);
            res.factors["det_E_lower"] = lo.factors["det_E_lower"];
            res.factors["det_E_upper"] = up.factors["det_E_upper"];
            return res;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace holey
