#include "holey/arith.hpp"

#include <algorithm>
#include <map>

namespace holey {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer length must be nonnegative");
    Rational out = 1;
    Rational term = a;
    for (long i = 0; i < k; ++i) {
        out *= term;
        if (out == 0) return out;
        term += 1;
    }
    return out;
}

Rational gamma_ratio(const std::vector<long>& num, const std::vector<long>& den) {
    // Regular arguments contribute (x-1)!. A pole at -a contributes the
    // residue (-1)^a / a! once the pole orders agree.
    Integer top = 1, bottom = 1;
    int top_poles = 0, bottom_poles = 0;
    for (long x : num) {
        if (x > 0) {
            top *= factorial(x - 1);
        } else {
            ++top_poles;
            long a = -x;
            bottom *= factorial(a);
            if (a % 2) top = -top;
        }
    }
    for (long x : den) {
        if (x > 0) {
            bottom *= factorial(x - 1);
        } else {
            ++bottom_poles;
            long a = -x;
            top *= factorial(a);
            if (a % 2) top = -top;
        }
    }
    if (top_poles > bottom_poles) throw GammaPole("gamma pole in numerator");
    if (bottom_poles > top_poles) return 0;
    Rational out(top, bottom);
    out.canonicalize();
    return out;
}

long termination_index(const std::vector<Rational>& num) {
    long best = -1;
    for (const auto& a : num) {
        if (is_integer(a) && a <= 0) {
            long stop = -a.get_num().get_si();
            if (best < 0 || stop < best) best = stop;
        }
    }
    return best;
}

Rational hyp_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& z) {
    if (z == 0) return 1;
    long last = termination_index(num);
    if (last < 0) throw SeriesError("series does not terminate");
    for (const auto& b : den) {
        if (is_integer(b) && b <= 0 && -b.get_num().get_si() < last) {
            throw SeriesError("denominator pochhammer vanishes inside the summation range");
        }
    }
    Rational sum = 0, term = 1;
    for (long k = 0; k <= last; ++k) {
        sum += term;
        if (k == last) break;
        for (const auto& a : num) term *= a + k;
        for (const auto& b : den) term /= b + k;
        term *= z;
        term /= k + 1;
    }
    return sum;
}

Product parse_product(const std::string& name) {
    if (name == "box") return Product::box;
    if (name == "transpose_complement" || name == "tc") return Product::transpose_complement;
    if (name == "vertical_symmetric" || name == "vs") return Product::vertical_symmetric;
    throw std::invalid_argument("unknown product formula: " + name);
}

std::string product_name(Product kind) {
    switch (kind) {
        case Product::box: return "box";
        case Product::transpose_complement: return "transpose_complement";
        case Product::vertical_symmetric: return "vertical_symmetric";
    }
    return "?";
}

namespace {

// Multiset of small integer factors with signed multiplicities.
class FactorTally {
public:
    void up(long t) { ++count_[t]; }
    void down(long t) { --count_[t]; }

    Rational value() const {
        Integer num = 1, den = 1;
        for (const auto& [t, e] : count_) {
            if (e == 0) continue;
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(e > 0 ? e : -e));
            (e > 0 ? num : den) *= power;
        }
        Rational out(num, den);
        out.canonicalize();
        return out;
    }

private:
    std::map<long, long> count_;
};

Integer require_integral(const Rational& q, const char* what) {
    if (!is_integer(q)) throw std::logic_error(std::string(what) + " product is not integral");
    return q.get_num();
}

}  // namespace

Integer product_formula(Product kind, long n, long m) {
    if (n < 1 || m < 1) throw std::domain_error("product formula needs n >= 1 and m >= 1");
    FactorTally tally;
    switch (kind) {
        case Product::box:
            for (long i = 1; i <= n; ++i)
                for (long j = 1; j <= 2 * m; ++j)
                    for (long k = 1; k <= n; ++k) {
                        tally.up(i + j + k - 1);
                        tally.down(i + j + k - 2);
                    }
            return require_integral(tally.value(), "box");
        case Product::transpose_complement: {
            for (long i = 1; i <= n - 2; ++i)
                for (long j = i; j <= n - 2; ++j) {
                    tally.up(2 * m + i + j + 1);
                    tally.down(i + j + 1);
                }
            Rational q = tally.value() * Rational(binomial(n + m - 1, n - 1));
            return require_integral(q, "transpose-complement");
        }
        case Product::vertical_symmetric:
            for (long i = 1; i <= n; ++i) {
                tally.up(2 * i + 2 * m - 1);
                tally.down(2 * i - 1);
            }
            for (long i = 1; i <= n; ++i)
                for (long j = i + 1; j <= n; ++j) {
                    tally.up(i + j + 2 * m - 1);
                    tally.down(i + j - 1);
                }
            return require_integral(tally.value(), "vertical-symmetric");
    }
    throw std::logic_error("unreachable");
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sign(const Rational& q) { return sgn(q); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("not a rational number: " + text);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace holey
