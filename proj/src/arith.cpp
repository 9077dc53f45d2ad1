#include "orbidim/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace orbidim {

long gcd(long a, long b) { return std::gcd(a, b); }

long lcm(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

std::vector<long> divisors(long n)
{
    if (n <= 0) throw std::domain_error("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long> prime_factors(long n)
{
    if (n <= 0) throw std::domain_error("prime_factors: n must be positive");
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long euler_phi(long n)
{
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

long dedekind_psi(long n)
{
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p + 1);
    return r;
}

long sigma1(long n)
{
    long s = 0;
    for (long d : divisors(n)) s += d;
    return s;
}

} // namespace orbidim
