#pragma once

#include <vector>

namespace orbidim {

long gcd(long a, long b);
long lcm(long a, long b);

/// Positive divisors of n in ascending order; n must be positive.
std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);

long euler_phi(long n);
/// psi(n) = n * prod_{p|n} (1 + 1/p), the index of Gamma0(n) in SL2(Z).
long dedekind_psi(long n);
long sigma1(long n);

} // namespace orbidim
