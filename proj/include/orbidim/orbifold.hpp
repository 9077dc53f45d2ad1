#pragma once

// Dimension formulae for cyclic orbifolds of holomorphic c = 24 VOAs, twisted
// module conformal weights and the screening of low-weight twisted modules.

#include "orbidim/liealg.hpp"
#include "orbidim/qseries.hpp"
#include "orbidim/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace orbidim::orbifold {

using liealg::AffineStructure;
using liealg::CoweightVec;
using liealg::RootSystem;
using liealg::WeightVec;

/// c_d with dim V1^orb = 24 + sum_{d|n} c_d dim V1^{sigma^d} (n > 1); n must be a genus-zero level.
std::map<long, Rational> c_coefficients(long n);

/// dims[d] = dim V1^{sigma^d} for every d | n.
struct DimProfile {
    long n = 1;
    std::map<long, Rational> dims;
};

Rational dim_orbifold(const DimProfile& profile);

/// Coefficient d_{i,j,k} of dim V(sigma^i, sigma^j)_{k/n} in the correction term; 1 <= i, j, k < n.
Integer d_coefficient(long n, long i, long j, long k);

using LowTermKey = std::tuple<long, long, long>; // (i, j, k)

struct RelationCheck {
    Rational lhs;
    Rational rhs;
    bool balanced = false;
};

/// Compares sum_{d|n} phi(g)/g (24 + (n/d) dim V1^sigma - dim V1^{orb(sigma^d)}), g = gcd(d, n/d),
/// with 24 + (24 / phi(n)) sum d_{i,j,k} lowTerms[(i,j,k)].
RelationCheck general_dimension_relation(const DimProfile& profile, const std::map<long, Rational>& orb_dims,
                                         const std::map<LowTermKey, Rational>& low_terms);

/// Frame shape prod t^{b_t}.
struct CycleShape {
    std::map<long, long> b;

    /// "1^-8 2^16"
    static CycleShape parse(const std::string& text);
    std::string str() const;
};

/// (1/24) sum b_t (t - 1/t).
Rational vacuum_anomaly(const CycleShape& shape);

struct TwistType {
    long n = 1;
    long t = 0;
    std::string str() const { return std::to_string(n) + "{" + std::to_string(t) + "}"; }
};
/// t = n^2 rho mod n; n^2 rho must be an integer.
TwistType twist_type(long n, const Rational& rho);

struct CycleStats {
    long fixed_rank = 0; // sum b_t
    long degree = 0;     // sum t b_t
    long order = 1;      // lcm of the t with b_t != 0
    Rational rho;
    std::optional<TwistType> type; // absent when order^2 rho is not an integer
    qseries::EtaQuotient eta; // prod eta(t tau)^{b_t}
};
CycleStats cycle_shape_stats(const CycleShape& shape);

/// Least-norm element of h + Q^v (ties: lexicographically least coordinates); satisfies |a(h')| <= 1.
CoweightVec alcove_representative(const RootSystem& rs, const CoweightVec& h);

/// <h, h> = sum_i k_i (h_i, h_i).
Rational structure_norm(const AffineStructure& s, const std::vector<CoweightVec>& hs);

/// rho(M) + sum_i lambda_i(h_i^-) + <h,h>/2 for M = tensor of L(k_i, lambda_i).
/// Every h_i must satisfy |a(h_i)| <= 1 on all roots.
Rational twisted_module_weight(const AffineStructure& s, const std::vector<WeightVec>& lambdas,
                               const std::vector<CoweightVec>& hs);

struct ScreenEntry {
    std::vector<WeightVec> lambdas;
    Rational rho;      // rho(M)
    Rational twisted;  // rho(M^(h))
};

struct ScreenResult {
    std::vector<ScreenEntry> problematic;    // integral rho(M) in [2, cap] with twisted weight below floor
    std::vector<ScreenEntry> beyond_cap;     // integral rho(M) > cap with twisted weight below floor
    long examined = 0;
};

ScreenResult screen_problematic_modules(const AffineStructure& s, const std::vector<CoweightVec>& hs,
                                        const Rational& floor = 1, const Rational& rho_cap = 3);

} // namespace orbidim::orbifold
