#include "holey/matrices.hpp"

namespace holey {

namespace {

// q * sqrt(pi)^half_pi, enough to carry Gamma at half-integers exactly.
struct PiRational {
    Rational q = 1;
    int half_pi = 0;

    void mul(const Rational& x) { q *= x; }
    void div(const Rational& x) { q /= x; }
    void div_pi() { half_pi -= 2; }
    void mul_pow2(long e) {
        Integer p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e >= 0) q *= p;
        else q /= p;
    }
    void gamma(const Rational& x, int power) {
        if (is_integer(x)) {
            if (x <= 0) throw GammaPole("gamma pole at " + x.get_str());
            Rational f(factorial(x.get_num().get_si() - 1));
            power > 0 ? q *= f : q /= f;
            return;
        }
        if (x.get_den() != 2) throw std::domain_error("gamma only at integers and half-integers");
        // x = t + 1/2
        Rational shifted = x - Rational(1, 2);
        long t = shifted.get_num().get_si();
        Rational f;
        if (t >= 0) {
            Integer four;
            mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(t));
            f = Rational(factorial(2 * t), four * factorial(t));
        } else {
            long u = -t;
            Integer four;
            mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(u));
            f = Rational(four * factorial(u), factorial(2 * u));
            if (u % 2) f = -f;
        }
        f.canonicalize();
        power > 0 ? q *= f : q /= f;
        half_pi += power;
    }
    void up(const Rational& x) { gamma(x, 1); }
    void down(const Rational& x) { gamma(x, -1); }
};

Rational half(long a) {
    Rational h(a, 2);
    h.canonicalize();
    return h;
}

// The entry whose series carries the (r - l)/2 + 3/2 style denominator.
PiRational far_branch(long n, long m, long l, long r, Part part, ClosedVariant variant, Rational& series) {
    PiRational t;
    const bool upper = part == Part::upper;
    const long shift = upper ? 1 : 0;  // the primed form moves several arguments by one
    series = hyp_terminating({half(r - n) + 1, 1, half(r - l) + 2, half(n + r + 1 + 2 * shift)},
                             {Rational(m) + half(n + r) + 2, half(r - n) - m + 2, half(r - l + 3 + 2 * shift)}, 1);
    t.up(m + n + 1);
    t.up(half(n + r + 1 + 2 * shift));
    if (upper && variant == ClosedVariant::printed) t.up(half(l + m + n) + 1);
    else t.up(half(l + n) + m);
    t.up(Rational(m) + half(n - r) - 1);
    t.down(half(n - r));
    t.down(Rational(m) + half(n - l) + 1);
    t.down(Rational(m) + half(n + r) + 2);
    t.mul_pow2(r - l + 2);
    t.up(Rational(m) + half(upper ? 1 : 3));
    t.up(half(n - l + 1 + 2 * shift));
    t.div_pi();
    t.div(r - l + 1 + 2 * shift);
    t.down(m);
    t.down(half(l + n));
    t.down(Rational(m + n) + half(upper ? 1 : -1));
    return t;
}

PiRational near_branch(long n, long m, long l, long r, Part part, Rational& series) {
    PiRational t;
    const bool upper = part == Part::upper;
    t.mul(-1);
    t.mul_pow2(r - l + 2);
    t.up(Rational(m) + half(upper ? 1 : 3));
    t.up(half(n - l + (upper ? 3 : 1)));
    t.up(m + n + 1);
    t.up(half(n + r + (upper ? 3 : 1)));
    if (!upper) t.div(3);
    t.div_pi();
    t.down(m);
    t.down(half(n - l + 4));
    t.down(Rational(m + n) + half(upper ? 1 : -1));
    t.down(half(n + r + 4));
    series = hyp_terminating({half(r - l) + 2, half(upper ? 1 : 3), m + n + 1, 1 - m},
                             {half(n - l) + 2, half(n + r) + 2, half(upper ? 3 : 5)}, 1);
    return t;
}

}  // namespace

ClosedForm closed_form_entry(const RegionSpec& spec, Part half_part, std::size_t i, std::size_t j, ClosedVariant variant) {
    if (half_part != Part::lower && half_part != Part::upper) throw std::invalid_argument("closed forms exist for lower/upper only");
    const long n = spec.n, m = spec.m;
    const long l = spec.left.at(i), r = spec.right.at(j);
    // Upper printed form selects its first expression when r < l.
    bool far = r > l;
    if (half_part == Part::upper && variant == ClosedVariant::printed) far = r < l;
    ClosedForm out;
    try {
        Rational series;
        PiRational t = far ? far_branch(n, m, l, r, half_part, variant, series) : near_branch(n, m, l, r, half_part, series);
        out.defined = true;
        out.rational = t.half_pi == 0;
        out.value = t.q * series;
        if (!out.rational) out.note = "residual sqrt(pi) power " + std::to_string(t.half_pi);
    } catch (const std::domain_error& e) {
        out.defined = false;
        out.note = e.what();
    }
    return out;
}

}  // namespace holey
