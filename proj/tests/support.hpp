#pragma once

// Seeded generators and small independent oracles shared by the test binaries.
// Nothing here calls into the library code it is used to check.

#include "orbidim/rational.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace orbidim::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }

    // p/q with q in [1, max_den] and |p/q| <= bound
    Rational rational(long bound, long max_den)
    {
        long q = uniform(1, max_den);
        Rational r(uniform(-bound * q, bound * q), q);
        r.canonicalize();
        return r;
    }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

private:
    std::mt19937_64 gen_;
};

// Coefficients of prod_{k>=1} (1 - q^{d k})^r up to q^{len-1}, by repeated multiplication.
inline std::vector<Integer> brute_eta_power(long d, long r, std::size_t len)
{
    std::vector<Integer> poly(len, 0);
    poly[0] = 1;
    auto mul_factor = [&](long step, bool invert) {
        // times (1 - q^step), or divided by it (geometric series)
        if (!invert) {
            for (std::size_t i = len; i-- > static_cast<std::size_t>(step);) poly[i] -= poly[i - step];
        } else {
            for (std::size_t i = static_cast<std::size_t>(step); i < len; ++i) poly[i] += poly[i - step];
        }
    };
    for (long k = 1; static_cast<std::size_t>(d * k) < len; ++k) {
        for (long t = 0; t < std::abs(r); ++t) mul_factor(d * k, r < 0);
    }
    return poly;
}

// Coefficients of prod_d prod_k (1 - q^{dk})^{r_d} up to q^{len-1}.
inline std::vector<Integer> brute_eta_product(const std::map<long, long>& exps, std::size_t len)
{
    std::vector<Integer> acc(len, 0);
    acc[0] = 1;
    for (const auto& [d, r] : exps) {
        auto f = brute_eta_power(d, r, len);
        std::vector<Integer> out(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j) out[i + j] += acc[i] * f[j];
        }
        acc = std::move(out);
    }
    return acc;
}

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

inline std::vector<long> divisors_of(long n)
{
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline long phi_of(long n)
{
    long c = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline long sigma_of(long m)
{
    long s = 0;
    for (long d : divisors_of(m)) s += d;
    return s;
}

// Orbifold dimension for an order-n twist obtained by solving the genus-zero relation
// with R = 0 recursively: the d = 1 term is the unknown, every other term refers to the
// orbifold by sigma^d, whose tower is dims[d * e].
inline Rational recursive_orbifold_dim(long n, const std::map<long, Rational>& dims)
{
    if (n == 1) return dims.at(1);
    Rational rest = 0;
    for (long d : divisors_of(n)) {
        if (d == 1) continue;
        long g = std::gcd(d, n / d);
        std::map<long, Rational> sub;
        for (long e : divisors_of(n / d)) sub[e] = dims.at(d * e);
        Rational orb = recursive_orbifold_dim(n / d, sub);
        Rational w(phi_of(g), g);
        w.canonicalize();
        rest += w * (24 + Rational(n / d) * dims.at(1) - orb);
    }
    // 24 + n dims[1] - orb(sigma) + rest = 24
    Rational out = Rational(n) * dims.at(1) + rest;
    out.canonicalize();
    return out;
}

// c_d read off the recursion by evaluating it on unit profiles.
inline std::map<long, Rational> recursive_coefficients(long n)
{
    std::map<long, Rational> zero;
    for (long d : divisors_of(n)) zero[d] = 0;
    Rational base = recursive_orbifold_dim(n, zero);
    std::map<long, Rational> out;
    for (long d : divisors_of(n)) {
        auto unit = zero;
        unit[d] = 1;
        out[d] = recursive_orbifold_dim(n, unit) - base;
        out[d].canonicalize();
    }
    // the constant must be 24 for n > 1
    out[0] = base;
    return out;
}

} // namespace orbidim::testing
