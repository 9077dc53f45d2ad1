#include "orbidim/orbifold.hpp"

#include "orbidim/arith.hpp"
#include "orbidim/modcurve.hpp"

#include <sstream>
#include <stdexcept>

namespace orbidim::orbifold {

namespace {

// lambda(d) = prod_{p | d} (-p)
long lambda_sign(long d)
{
    long v = 1;
    for (long p : prime_factors(d)) v *= -p;
    return v;
}

struct DTableRow {
    long modulus;
    std::map<long, long> values; // ij mod modulus -> d_{i,j,k}
};

// Keyed by (n, gcd(i, j, n)) for composite n where gcd(i, j, n) > 1.
const std::map<std::pair<long, long>, DTableRow>& d_table()
{
    static const std::map<std::pair<long, long>, DTableRow> table{
        {{6, 2}, {6, {{2, 5}, {4, 1}}}},
        {{6, 3}, {6, {{3, 2}}}},
        {{8, 2}, {16, {{4, 2}, {12, 6}}}},
        {{10, 2}, {10, {{2, 13}, {4, 4}, {6, 5}, {8, 1}}}},
        {{10, 5}, {10, {{5, 4}}}},
        {{12, 2}, {24, {{4, 4}, {8, 2}, {16, 12}, {20, 6}}}},
        {{12, 3}, {12, {{3, 14}, {6, 4}, {9, 2}}}},
        {{12, 4}, {12, {{4, 8}, {8, 2}}}},
        {{16, 2}, {32, {{4, 8}, {8, 4}, {12, 2}, {20, 24}, {24, 12}, {28, 6}}}},
        {{18, 2}, {18, {{2, 29}, {4, 8}, {6, 15}, {8, 6}, {10, 13}, {12, 3}, {14, 5}, {16, 1}}}},
        {{18, 3}, {54, {{9, 6}, {27, 6}, {45, 15}}}},
        {{18, 9}, {18, {{9, 6}}}},
    };
    return table;
}

bool is_prime(long n) { return n > 1 && prime_factors(n) == std::vector<long>{n}; }

} // namespace

std::map<long, Rational> c_coefficients(long n)
{
    if (!modcurve::is_genus_zero_level(n)) throw std::domain_error(std::to_string(n) + " is not a genus-zero level");
    std::map<long, Rational> c;
    for (long d : divisors(n)) {
        long g = gcd(d, n / d);
        Rational v = frac(lambda_sign(d), d);
        v *= frac(euler_phi(g), g);
        v *= dedekind_psi(n / d);
        v.canonicalize();
        c[d] = v;
    }
    return c;
}

Rational dim_orbifold(const DimProfile& profile)
{
    auto c = c_coefficients(profile.n);
    for (long d : divisors(profile.n)) {
        if (!profile.dims.count(d)) throw std::invalid_argument("dimension profile lacks d = " + std::to_string(d));
    }
    // The orbifold by the identity is the VOA itself.
    if (profile.n == 1) return profile.dims.at(1);
    Rational total = 24;
    for (const auto& [d, cd] : c) total += cd * profile.dims.at(d);
    return total;
}

Integer d_coefficient(long n, long i, long j, long k)
{
    if (!modcurve::is_genus_zero_level(n) || n < 2) throw std::domain_error(std::to_string(n) + " is not a genus-zero level above 1");
    if (i < 1 || i >= n || j < 1 || j >= n || k < 1 || k >= n) throw std::domain_error("d_coefficient: indices must lie in [1, n)");
    if ((i * j) % n != k) throw std::domain_error("d_coefficient: requires k = ij mod n");
    long m = n - k;
    if (is_prime(n)) return Integer(sigma1(m));
    long g = gcd(gcd(i, j), n);
    if (g == 1) {
        long s = 0;
        for (long d : divisors(m)) {
            if (gcd(d, n) == 1) s += m / d;
        }
        return Integer(s);
    }
    const auto& table = d_table();
    auto it = table.find({n, g});
    if (it != table.end()) {
        long r = (i * j) % it->second.modulus;
        auto jt = it->second.values.find(r);
        if (jt != it->second.values.end()) return Integer(jt->second);
    }
    throw std::domain_error("d_coefficient: no tabulated value for n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                            ", j=" + std::to_string(j));
}

RelationCheck general_dimension_relation(const DimProfile& profile, const std::map<long, Rational>& orb_dims,
                                         const std::map<LowTermKey, Rational>& low_terms)
{
    long n = profile.n;
    if (!profile.dims.count(1)) throw std::invalid_argument("dimension profile lacks dim V1^sigma");
    RelationCheck res;
    const Rational& fixed = profile.dims.at(1);
    for (long d : divisors(n)) {
        auto it = orb_dims.find(d);
        if (it == orb_dims.end()) throw std::invalid_argument("orbifold dimensions lack d = " + std::to_string(d));
        long g = gcd(d, n / d);
        res.lhs += frac(euler_phi(g), g) * (24 + (n / d) * fixed - it->second);
    }
    Rational r = 0;
    for (const auto& [key, value] : low_terms) {
        auto [i, j, k] = key;
        r += Rational(d_coefficient(n, i, j, k)) * value;
    }
    res.rhs = 24 + frac(24, euler_phi(n)) * r;
    res.lhs.canonicalize();
    res.rhs.canonicalize();
    res.balanced = res.lhs == res.rhs;
    return res;
}

CycleShape CycleShape::parse(const std::string& text)
{
    CycleShape s;
    std::stringstream ss(text);
    std::string item;
    while (ss >> item) {
        auto caret = item.find('^');
        long t = 0, b = 1;
        try {
            t = std::stol(item.substr(0, caret));
            if (caret != std::string::npos) b = std::stol(item.substr(caret + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("cycle shape entries look like t^b: " + item);
        }
        if (t <= 0) throw std::invalid_argument("cycle length must be positive: " + item);
        s.b[t] += b;
        if (s.b[t] == 0) s.b.erase(t);
    }
    if (s.b.empty()) throw std::invalid_argument("empty cycle shape");
    return s;
}

std::string CycleShape::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, b] : this->b) {
        if (!first) os << ' ';
        first = false;
        os << t << '^' << b;
    }
    return os.str();
}

namespace {

// (1/24) sum b_t (t - 1/t), any degree
Rational anomaly_sum(const CycleShape& shape)
{
    Rational r = 0;
    for (const auto& [t, b] : shape.b) r += b * (Rational(t) - frac(1, t));
    r /= 24;
    r.canonicalize();
    return r;
}

} // namespace

Rational vacuum_anomaly(const CycleShape& shape)
{
    long degree = 0;
    for (const auto& [t, b] : shape.b) degree += t * b;
    if (degree != 24) throw std::domain_error("vacuum_anomaly: cycle shape " + shape.str() + " has degree " + std::to_string(degree));
    return anomaly_sum(shape);
}

TwistType twist_type(long n, const Rational& rho)
{
    if (n < 1) throw std::domain_error("twist_type: order must be positive");
    Rational scaled = rho * n * n;
    if (!is_integer(scaled)) throw std::domain_error("twist_type: n^2 rho is not an integer");
    long t = to_long(scaled) % n;
    if (t < 0) t += n;
    return TwistType{n, t};
}

CycleStats cycle_shape_stats(const CycleShape& shape)
{
    CycleStats s;
    for (const auto& [t, b] : shape.b) {
        s.fixed_rank += b;
        s.degree += t * b;
        s.order = lcm(s.order, t);
        s.eta.exps[t] = b;
    }
    s.eta.level = s.order;
    s.rho = anomaly_sum(shape);
    if (is_integer(s.rho * s.order * s.order)) s.type = twist_type(s.order, s.rho);
    return s;
}

} // namespace orbidim::orbifold
