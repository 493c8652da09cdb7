#pragma once

// Shared test helpers: independent reference computations and the
// hypergeometric identity samplers.

#include "holey/arith.hpp"

#include <random>
#include <vector>

namespace holey::testing {

// Box formula as the plain triple product over an n x 2m x n box.
inline Rational box_triple_product(long n, long m) {
    Rational out = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= 2 * m; ++j)
            for (long k = 1; k <= n; ++k) out *= Rational(i + j + k - 1, i + j + k - 2);
    return out;
}

// Term-by-term sum of a terminating series, accumulated from the last term
// down, with each term rebuilt from scratch.
inline Rational series_backwards(const std::vector<Rational>& num, const std::vector<Rational>& den, const Rational& z,
                                 long last) {
    Rational sum = 0;
    for (long k = last; k >= 0; --k) {
        Rational term = 1;
        for (const auto& a : num)
            for (long t = 0; t < k; ++t) term *= a + t;
        for (const auto& b : den)
            for (long t = 0; t < k; ++t) term /= b + t;
        for (long t = 1; t <= k; ++t) term *= z / t;
        sum += term;
    }
    return sum;
}

struct IdentityTally {
    int checked = 0;
    int agreed = 0;
};

class ParameterSampler {
public:
    explicit ParameterSampler(unsigned seed) : rng_(seed) {}

    Rational rational() {
        static const long dens[] = {1, 2, 3, 5};
        std::uniform_int_distribution<long> num(-30, 30);
        std::uniform_int_distribution<int> pick(0, 3);
        Rational q(num(rng_), dens[pick(rng_)]);
        q.canonicalize();
        return q;
    }

    long length(long hi) { return std::uniform_int_distribution<long>(0, hi)(rng_); }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline bool nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

inline bool degenerate(const std::vector<Rational>& ps) {
    for (const auto& p : ps)
        if (nonpositive_integer(p)) return true;
    return false;
}

// Terminating very-well-poised 5F4 sum with d = -N:
// 5F4[a, a/2+1, b, c, -N; a/2, a-b+1, a-c+1, a+N+1; 1]
//   = (a+1)_N (a-b-c+1)_N / ((a-b+1)_N (a-c+1)_N).
inline IdentityTally check_five_four(unsigned seed, int wanted) {
    ParameterSampler s(seed);
    IdentityTally t;
    for (int attempt = 0; t.checked < wanted && attempt < 100 * wanted; ++attempt) {
        Rational a = s.rational(), b = s.rational(), c = s.rational();
        long N = s.length(6);
        std::vector<Rational> num{a, a / 2 + 1, b, c}, den{a / 2, a - b + 1, a - c + 1, a + N + 1};
        if (degenerate(num) || degenerate(den) || degenerate({a + 1, a - b - c + 1})) continue;
        num.push_back(-N);
        Rational lhs = hyp_terminating(num, den, 1);
        Rational rhs = pochhammer(a + 1, N) * pochhammer(a - b - c + 1, N) /
                       (pochhammer(a - b + 1, N) * pochhammer(a - c + 1, N));
        ++t.checked;
        t.agreed += lhs == rhs;
    }
    return t;
}

// Balanced 4F3 transformation:
// 4F3[a, b, c, -N; e, f, a+b+c-e-f-N+1; 1]
//   = (e-a)_N (f-a)_N / ((e)_N (f)_N)
//     * 4F3[-N, a, a+c-e-f-N+1, a+b-e-f-N+1; a+b+c-e-f-N+1, a-e-N+1, a-f-N+1; 1].
inline IdentityTally check_four_three(unsigned seed, int wanted) {
    ParameterSampler s(seed);
    IdentityTally t;
    for (int attempt = 0; t.checked < wanted && attempt < 100 * wanted; ++attempt) {
        Rational a = s.rational(), b = s.rational(), c = s.rational(), e = s.rational(), f = s.rational();
        long N = s.length(6);
        Rational g = a + b + c - e - f - N + 1;
        std::vector<Rational> n1{a, b, c}, d1{e, f, g};
        std::vector<Rational> n2{a, a + c - e - f - N + 1, a + b - e - f - N + 1}, d2{g, a - e - N + 1, a - f - N + 1};
        if (degenerate(n1) || degenerate(d1) || degenerate(n2) || degenerate(d2)) continue;
        n1.push_back(-N);
        n2.insert(n2.begin(), -N);
        Rational lhs = hyp_terminating(n1, d1, 1);
        Rational rhs = hyp_terminating(n2, d2, 1) * pochhammer(e - a, N) * pochhammer(f - a, N) /
                       (pochhammer(e, N) * pochhammer(f, N));
        ++t.checked;
        t.agreed += lhs == rhs;
    }
    return t;
}

// Very-well-poised 7F6 reduced to a balanced 4F3:
// 7F6[a, a/2+1, b, c, d, e, -N; a/2, a-b+1, a-c+1, a-d+1, a-e+1, a+N+1; 1]
//   = (a+1)_N (a-d-e+1)_N / ((a-d+1)_N (a-e+1)_N)
//     * 4F3[a-b-c+1, d, e, -N; a-b+1, a-c+1, -a+d+e-N; 1].
inline IdentityTally check_seven_six(unsigned seed, int wanted) {
    ParameterSampler s(seed);
    IdentityTally t;
    for (int attempt = 0; t.checked < wanted && attempt < 100 * wanted; ++attempt) {
        Rational a = s.rational(), b = s.rational(), c = s.rational(), d = s.rational(), e = s.rational();
        long N = s.length(5);
        std::vector<Rational> n1{a, a / 2 + 1, b, c, d, e};
        std::vector<Rational> d1{a / 2, a - b + 1, a - c + 1, a - d + 1, a - e + 1, a + N + 1};
        std::vector<Rational> n2{a - b - c + 1, d, e}, d2{a - b + 1, a - c + 1, -a + d + e - N};
        if (degenerate(n1) || degenerate(d1) || degenerate(n2) || degenerate(d2)) continue;
        n1.push_back(-N);
        n2.push_back(-N);
        Rational lhs = hyp_terminating(n1, d1, 1);
        Rational rhs = pochhammer(a + 1, N) * pochhammer(a - d - e + 1, N) /
                       (pochhammer(a - d + 1, N) * pochhammer(a - e + 1, N)) * hyp_terminating(n2, d2, 1);
        ++t.checked;
        t.agreed += lhs == rhs;
    }
    return t;
}

}  // namespace holey::testing
