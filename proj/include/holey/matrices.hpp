#pragma once

// Path-count matrices, their LU factors, the hole blocks E and the
// resulting exact tiling counts.

#include "holey/arith.hpp"
#include "holey/regions.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace holey {

class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t order) : order_(order), a_(order * order) {}

    std::size_t order() const { return order_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * order_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * order_ + j]; }

private:
    std::size_t order_ = 0;
    std::vector<Rational> a_;
};

ExactMatrix matrix_from(const std::vector<std::vector<long>>& rows);

// Bareiss elimination after clearing row denominators.
Rational det_exact(const ExactMatrix& M);

enum class PathVariant { plain, avoid_diagonal, weighted_below };

Integer path_count(const LatticePoint& from, const LatticePoint& to, PathVariant variant);

// Order m + p; rows and columns are boundary points first, then holes in
// ascending position. Part::lower or Part::upper.
ExactMatrix build_Q(const RegionSpec& spec, Part half);
Integer q_entry(const RegionSpec& spec, Part half, std::size_t i, std::size_t j);

enum class LuFactor { A, B, C, D };

// 1-based indices as in the block layout: A(i,j), C(i,j) with i,j <= m;
// B(i,j) with i > m, j <= m; D(i,j) with i <= m, j > m. Part::upper selects
// the primed family.
Rational lu_entry(LuFactor name, long i, long j, const RegionSpec& spec, Part half);

struct LuPerturbation {
    LuFactor factor;
    long i;
    long j;
    Rational delta;
};

struct LuReport {
    bool ok = true;
    std::string block;  // "i", "ii" or "iii" for the first failing identity
    long i = 0;
    long j = 0;
    Rational expected;
    Rational got;
};

LuReport verify_lu(const RegionSpec& spec, Part half, const std::optional<LuPerturbation>& perturb = std::nullopt);

// Schur complement block by the subtraction form; never builds Q.
ExactMatrix build_E(const RegionSpec& spec, Part half);

enum class ClosedVariant { printed, corrected };

struct ClosedForm {
    bool defined = false;         // false when a series or Gamma value blows up
    bool rational = false;        // the sqrt(pi) powers cancelled
    Rational value;
    std::string note;
};

// Hypergeometric closed form for the (i, j) entry of E (0-based hole
// indices).
ClosedForm closed_form_entry(const RegionSpec& spec, Part half, std::size_t i, std::size_t j,
                             ClosedVariant variant = ClosedVariant::corrected);

struct Discrepancy {
    RegionSpec spec;
    Part half;
    std::size_t i;
    std::size_t j;
    Rational subtraction;
    ClosedForm closed;
};

std::vector<Discrepancy> compare_closed_forms(const RegionSpec& spec, Part half, ClosedVariant variant);

enum class CountKind { lower, upper_weighted, full, free_half };

CountKind parse_count_kind(const std::string& name);
std::string count_kind_name(CountKind kind);

struct FormulaMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct CountResult {
    RegionSpec spec;
    CountKind kind;
    Integer value;
    std::map<std::string, Rational> factors;
};

CountResult count_region(const RegionSpec& spec, CountKind kind);

struct HoleDeterminants {
    Rational lower;
    Rational upper;
};

HoleDeterminants hole_determinants(const RegionSpec& spec);

}  // namespace holey
