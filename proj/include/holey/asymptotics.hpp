#pragma once

// Real-valued limits: entry asymptotics, Cauchy determinants, predicted
// interactions and finite-n sweeps built on the exact hole determinants.

#include "holey/matrices.hpp"
#include "holey/regions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace holey {

// Leading behaviour of a single E entry for holes pointing away from each
// other (r > l). Throws on r == l.
double entry_asym(int r, int l, double xi, Part half);

// Product form of det[1 / (2 pi (x_i - y_j))] with x = -(sqrt3/2) l,
// y = -(sqrt3/2) r. Throws on coincident positions.
double cauchy_det(const std::vector<int>& left, const std::vector<int>& right);
double cauchy_det_direct(const std::vector<int>& left, const std::vector<int>& right);

enum class Model { bulk, free_boundary };

Model parse_model(const std::string& name);
std::string model_name(Model model);

double hole_constant(const InducedHole& h, Model model);

double predicted_interaction(const std::vector<InducedHole>& holes, Model model);

struct CorrelationReport {
    int n = 0;
    int m = 0;
    Rational xi;
    Rational det_lower_exact;
    Rational det_upper_exact;
    double det_lower = 0;
    double det_upper = 0;
    double omega = 0;
    double predicted = 0;
    double ratio = 0;
};

CorrelationReport finite_correlation(const RegionSpec& spec, Model model);

// m = round(xi * n / 2), at least 1.
int m_for(int n, const Rational& xi);

std::string csv_header();
std::string csv_row(const CorrelationReport& r);

struct SweepSeries {
    std::vector<CorrelationReport> reports;
    std::vector<double> distances;
    double slope = 0;
    double intercept = 0;
};

// Builds the spec for a given n and m.
using SpecFamily = std::function<RegionSpec(int n, int m)>;

std::vector<CorrelationReport> sweep_n(const SpecFamily& family, const Rational& xi, const std::vector<int>& ns,
                                       Model model);

// Pair L = {-d}, R = {d} at fixed n for each d; fits log omega against the
// log of the interacting distance (hole to hole for bulk, hole to image for
// the free boundary).
SweepSeries distance_sweep(int n, const Rational& xi, const std::vector<int>& ds, Model model);

struct LineFit {
    double slope = 0;
    double intercept = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

enum class Regime { critical, exponential_decay, exponential_growth };

std::string regime_name(Regime r);

// The leftmost hole is read in the plane frame x = -(sqrt3/2) * position,
// so it is the hole with the largest lattice position.
Regime classify_regime(const RegionSpec& spec, const Rational& xi);

}  // namespace holey
