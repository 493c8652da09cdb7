#pragma once

// Exact integer/rational kernel. Everything here is a pure function over
// GMP values.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace holey {

using Integer = mpz_class;
using Rational = mpq_class;

struct GammaPole : std::domain_error {
    using std::domain_error::domain_error;
};

struct SeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

// Zero outside 0 <= k <= n, for any integers n, k.
Integer binomial(long n, long k);

Integer factorial(long n);

// a (a+1) ... (a+k-1); 1 when k == 0.
Rational pochhammer(const Rational& a, long k);

// prod Gamma(num_i) / prod Gamma(den_j) at integer arguments.
// Poles are handled as limits: more denominator poles than numerator
// poles gives 0, equal counts give the ratio of residues, and an
// unmatched numerator pole throws GammaPole.
Rational gamma_ratio(const std::vector<long>& num, const std::vector<long>& den);

// Finite sum of a terminating pFq at z. Throws SeriesError if nothing in
// `num` is a nonpositive integer (and z != 0), or if a denominator
// Pochhammer vanishes before the series stops.
Rational hyp_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& z);

// Index of the last nonzero term, or -1 if the series does not terminate.
long termination_index(const std::vector<Rational>& num);

enum class Product { box, transpose_complement, vertical_symmetric };

Product parse_product(const std::string& name);
std::string product_name(Product kind);

// box: plane partitions in an n x 2m x n box.
// transpose_complement: Proctor's product (n even).
// vertical_symmetric: MacMahon's symmetric plane partition product.
Integer product_formula(Product kind, long n, long m);

bool is_integer(const Rational& q);
int sign(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);

}  // namespace holey
