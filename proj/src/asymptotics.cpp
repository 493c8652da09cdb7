#include "holey/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace holey {

double entry_asym(int r, int l, double xi, Part half) {
    if (r == l) throw std::domain_error("entry asymptotics need r != l");
    const double pi = std::numbers::pi;
    double sep = r - l;
    double base = std::pow(2.0 / (xi + 1.0), sep + 2.0) / (pi * sep);
    double root = std::sqrt(xi * (xi + 2.0));
    if (half == Part::lower) return root * base;
    if (half == Part::upper) return base / root;
    throw std::invalid_argument("entry asymptotics exist for lower/upper only");
}

namespace {

void check_distinct(const std::vector<int>& left, const std::vector<int>& right) {
    std::vector<int> all(left);
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::domain_error("Cauchy determinant needs distinct positions");
    if (left.size() != right.size()) throw std::domain_error("Cauchy determinant needs |L| = |R|");
}

double plane_x(int position) { return -std::sqrt(3.0) / 2.0 * position; }

}  // namespace

double cauchy_det(const std::vector<int>& left, const std::vector<int>& right) {
    check_distinct(left, right);
    const std::size_t p = left.size();
    const double two_pi = 2.0 * std::numbers::pi;
    double out = std::pow(1.0 / two_pi, static_cast<double>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            out *= plane_x(left[j]) - plane_x(left[i]);
            out *= plane_x(right[i]) - plane_x(right[j]);
        }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) out /= plane_x(left[i]) - plane_x(right[j]);
    return out;
}

double cauchy_det_direct(const std::vector<int>& left, const std::vector<int>& right) {
    check_distinct(left, right);
    const std::size_t p = left.size();
    std::vector<double> a(p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            a[i * p + j] = 1.0 / (2.0 * std::numbers::pi * (plane_x(left[i]) - plane_x(right[j])));
    double det = 1.0;
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < p; ++i)
            if (std::fabs(a[i * p + k]) > std::fabs(a[piv * p + k])) piv = i;
        if (a[piv * p + k] == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < p; ++j) std::swap(a[k * p + j], a[piv * p + j]);
            det = -det;
        }
        det *= a[k * p + k];
        for (std::size_t i = k + 1; i < p; ++i) {
            double f = a[i * p + k] / a[k * p + k];
            for (std::size_t j = k; j < p; ++j) a[i * p + j] -= f * a[k * p + j];
        }
    }
    return det;
}

Model parse_model(const std::string& name) {
    if (name == "bulk") return Model::bulk;
    if (name == "free" || name == "free_boundary") return Model::free_boundary;
    throw std::invalid_argument("unknown model: " + name);
}

std::string model_name(Model model) { return model == Model::bulk ? "bulk" : "free_boundary"; }

double hole_constant(const InducedHole& h, Model model) {
    const int half_charge = std::abs(charge(h)) / 2;
    double c = 1.0;
    for (int s = 0; s < half_charge; ++s) {
        double g = std::tgamma(s + 1.0);
        if (model == Model::bulk) c *= std::pow(3.0, s + 0.5) / (2.0 * std::numbers::pi) * g * g;
        else c *= std::pow(3.0, s / 2.0) * g / std::sqrt(2.0 * std::numbers::pi);
    }
    return c;
}

double predicted_interaction(const std::vector<InducedHole>& holes, Model model) {
    std::vector<InducedHole> all = holes;
    double exponent_scale = 0.5;
    if (model == Model::bulk) {
        int total = 0;
        for (const auto& h : holes) total += charge(h);
        if (total != 0) throw std::domain_error("bulk prediction needs total charge zero");
    } else {
        exponent_scale = 0.25;
        for (const auto& h : holes) {
            if (h.right_pointing) throw std::domain_error("free boundary prediction needs left-pointing holes");
            InducedHole image = h;
            image.right_pointing = true;
            image.center = -h.center;
            all.push_back(image);
        }
    }
    double out = 1.0;
    for (const auto& h : all) out *= hole_constant(h, model);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            double d = distance(to_double(all[i].center), to_double(all[j].center));
            out *= std::pow(d, exponent_scale * charge(all[i]) * charge(all[j]));
        }
    return out;
}

int m_for(int n, const Rational& xi) {
    Rational target = xi * n / 2;
    // round half up
    Integer floor_twice = (2 * target.get_num() + target.get_den()) / (2 * target.get_den());
    long m = floor_twice.get_si();
    return static_cast<int>(std::max(1L, m));
}

CorrelationReport finite_correlation(const RegionSpec& spec, Model model) {
    CorrelationReport rep;
    rep.n = spec.n;
    rep.m = spec.m;
    rep.xi = Rational(2 * spec.m, spec.n);
    rep.xi.canonicalize();
    HoleDeterminants d = hole_determinants(spec);
    rep.det_lower_exact = d.lower;
    rep.det_upper_exact = d.upper;
    rep.det_lower = to_double(d.lower);
    rep.det_upper = to_double(d.upper);
    std::vector<InducedHole> holes = induced_holes(spec);
    if (model == Model::bulk) {
        rep.omega = to_double(d.lower * d.upper);
        rep.predicted = predicted_interaction(holes, Model::bulk);
    } else {
        if (!free_half_allowed(spec)) throw std::invalid_argument("free boundary model needs R = -L with r > 0");
        rep.omega = std::fabs(rep.det_upper);
        std::vector<InducedHole> west;
        for (const auto& h : holes)
            if (!h.right_pointing) west.push_back(h);
        rep.predicted = predicted_interaction(west, Model::free_boundary);
    }
    rep.ratio = rep.omega / rep.predicted;
    return rep;
}

std::string csv_header() { return "n,m,xi,det_lower,det_upper,omega,predicted,ratio"; }

std::string csv_row(const CorrelationReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%d,%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g", r.n, r.m, r.xi.get_str().c_str(), r.det_lower,
                  r.det_upper, r.omega, r.predicted, r.ratio);
    return buf;
}

std::vector<CorrelationReport> sweep_n(const SpecFamily& family, const Rational& xi, const std::vector<int>& ns,
                                       Model model) {
    std::vector<int> order(ns);
    std::sort(order.begin(), order.end());
    std::vector<CorrelationReport> out;
    for (int n : order) {
        CorrelationReport r = finite_correlation(family(n, m_for(n, xi)), model);
        r.xi = xi;
        out.push_back(r);
    }
    return out;
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("line fit needs at least two points");
    const double k = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit fit;
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

SweepSeries distance_sweep(int n, const Rational& xi, const std::vector<int>& ds, Model model) {
    SweepSeries out;
    const int m = m_for(n, xi);
    std::vector<double> lx, ly;
    for (int d : ds) {
        RegionSpec spec = make_spec(n, m, {-d}, {d});
        CorrelationReport r = finite_correlation(spec, model);
        r.xi = xi;
        double dist = distance(-d, d);
        out.reports.push_back(r);
        out.distances.push_back(dist);
        lx.push_back(std::log(dist));
        ly.push_back(std::log(r.omega));
    }
    LineFit fit = least_squares(lx, ly);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    return out;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::critical: return "critical";
        case Regime::exponential_decay: return "exponential_decay";
        case Regime::exponential_growth: return "exponential_growth";
    }
    return "?";
}

Regime classify_regime(const RegionSpec& spec, const Rational& xi) {
    if (spec.holes() == 0) throw std::domain_error("regime needs at least one hole");
    if (xi <= 0) throw std::domain_error("xi must be positive");
    if (xi == 1) return Regime::critical;
    int top_left = spec.left.back(), top_right = spec.right.back();
    bool leftmost_right_pointing = top_right > top_left;
    bool decay = leftmost_right_pointing == (xi > 1);
    return decay ? Regime::exponential_decay : Regime::exponential_growth;
}

}  // namespace holey
