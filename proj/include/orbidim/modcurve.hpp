#pragma once

// Cusps of Gamma0(n), genus-zero Hauptmoduln and the eta quotients f_s with a
// single simple pole at a chosen cusp.

#include "orbidim/qseries.hpp"
#include "orbidim/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace orbidim::modcurve {

/// Cusp a/c of Gamma0(n) with c | n.
struct Cusp {
    long a = 1;
    long c = 1;
    long width = 1;

    std::string str() const { return std::to_string(a) + "/" + std::to_string(c); }
    bool operator==(const Cusp& other) const { return a == other.a && c == other.c; }
};

class NotImplementedLevel : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

const std::vector<long>& genus_zero_levels();
bool is_genus_zero_level(long n);

/// Representatives a/c for c | n (descending) with a running over units mod gcd(c, n/c).
/// Each a is the least positive integer in its class that is coprime to c.
std::vector<Cusp> cusp_classes(long n);

/// Representative of the class of a/c, for c | n and gcd(a, c) = 1.
Cusp canonical_cusp(long n, long a, long c);
/// Parses "a/c" and returns canonical_cusp.
Cusp parse_cusp(long n, const std::string& text);

bool is_infinity(long n, const Cusp& s);

/// Levels with tabulated f_s quotients.
const std::vector<long>& supported_levels();

/// Hauptmodul t_n = f_{infinity}; throws NotImplementedLevel outside supported_levels().
qseries::EtaQuotient hauptmodul(long n);
/// Eta quotient with a simple pole at s, normalised with leading coefficient 1 where it has a pole at infinity.
qseries::EtaQuotient cusp_function(long n, const Cusp& s);

/// Order of f at the cusp a/c in the local q-parameter scaled by 1/width:
/// (1/24) * sum_d gcd(c, d)^2 r_d / d.
Rational divisor_order(const qseries::EtaQuotient& f, const Cusp& s);

struct DivisorEntry {
    Cusp cusp;
    Rational order;
};
std::vector<DivisorEntry> divisor(const qseries::EtaQuotient& f, long n);
nlohmann::json divisor_json(const std::vector<DivisorEntry>& div);

} // namespace orbidim::modcurve
