#pragma once

// Truncated power series in fractional powers of q.
//
// A series stores exponents as numerators over a common denominator N, so the
// term c * q^(p/N) lives at terms[p].  Everything at or above `prec` is unknown.

#include "orbidim/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace orbidim::qseries {

class FracPowerSeries {
public:
    FracPowerSeries() = default;
    /// Zero series known up to q^prec, exponents over denominator N.
    FracPowerSeries(long denom, Rational prec);

    long denom() const { return denom_; }
    const Rational& prec() const { return prec_; }
    const std::map<long, Rational>& terms() const { return terms_; }

    /// Adds c * q^(numer/N); drops the term if it falls at or beyond prec.
    void add_term(long numer, const Rational& c);

    /// Coefficient of q^e; throws std::domain_error if e >= prec.
    Rational coefficient(const Rational& e) const;

    /// Smallest exponent with a nonzero coefficient, if any.
    std::optional<Rational> leading_exponent() const;

    /// Same series with exponents over a multiple of the current denominator.
    FracPowerSeries with_denom(long n) const;

    /// Drops terms at or above the new (smaller) precision.
    FracPowerSeries truncated(const Rational& prec) const;

    bool operator==(const FracPowerSeries& other) const;

private:
    long denom_ = 1;
    Rational prec_ = 0;
    std::map<long, Rational> terms_;
};

FracPowerSeries operator+(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries operator-(const FracPowerSeries& a);
FracPowerSeries operator-(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries operator*(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries operator*(const Rational& c, const FracPowerSeries& a);
/// Throws std::domain_error when the divisor has no known nonzero term.
FracPowerSeries operator/(const FracPowerSeries& a, const FracPowerSeries& b);
FracPowerSeries inverse(const FracPowerSeries& a);
FracPowerSeries pow(const FracPowerSeries& a, long k);

/// q^(1/24) * prod_{n>=1} (1 - q^n) up to (excluding) q^prec.
FracPowerSeries eta_expand(const Rational& prec);

/// Eta quotient prod_d eta(d tau)^{r_d}.
struct EtaQuotient {
    long level = 1;
    std::map<long, long> exps;

    /// (1/24) * sum d r_d, the exponent of the leading q-power.
    Rational leading_exponent() const;
    /// Half the sum of exponents.
    Rational weight() const;
    bool operator==(const EtaQuotient& other) const = default;
};

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);
EtaQuotient inverse(const EtaQuotient& a);

/// Parses "d:r,d:r,..." (level is the lcm of the d's).
EtaQuotient parse_eta_quotient(const std::string& text);
std::string to_string(const EtaQuotient& f);

/// q-expansion of an eta quotient up to q^prec; prec must exceed the leading exponent.
FracPowerSeries etaq_expand(const EtaQuotient& f, const Rational& prec);

/// "c * q^(p/N) + ... + O(q^(prec))" in ascending exponent order.
std::string render(const FracPowerSeries& s);

} // namespace orbidim::qseries
