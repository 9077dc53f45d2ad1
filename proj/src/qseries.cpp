#include "orbidim/qseries.hpp"

#include "orbidim/arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orbidim::qseries {

namespace {

Rational make_exponent(long numer, long denom)
{
    Rational e(numer, denom);
    e.canonicalize();
    return e;
}

// Dense integer power series in q (integral exponents), truncated to `len` terms.
using Dense = std::vector<Integer>;

Dense dense_mul(const Dense& a, const Dense& b, std::size_t len)
{
    Dense out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Inverse of a dense series with constant term +-1.
Dense dense_inverse(const Dense& a, std::size_t len)
{
    Dense inv(len, 0);
    const Integer& a0 = a.at(0);
    if (a0 != 1 && a0 != -1) throw std::domain_error("dense_inverse: unit constant term required");
    inv[0] = a0;
    for (std::size_t k = 1; k < len; ++k) {
        Integer s = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * inv[k - j];
        inv[k] = -s * a0;
    }
    return inv;
}

Dense dense_pow(Dense base, long k, std::size_t len)
{
    if (k < 0) {
        base = dense_inverse(base, len);
        k = -k;
    }
    Dense result(len, 0);
    result[0] = 1;
    while (k > 0) {
        if (k & 1) result = dense_mul(result, base, len);
        k >>= 1;
        if (k > 0) base = dense_mul(base, base, len);
    }
    return result;
}

// prod_{n>=1} (1 - q^{d n}) truncated to len terms, via the pentagonal numbers.
Dense euler_product(long d, std::size_t len)
{
    Dense out(len, 0);
    for (long k = 0;; ++k) {
        bool any = false;
        std::vector<long> ks = k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k};
        for (long kk : ks) {
            long e = d * (kk * (3 * kk - 1) / 2);
            if (e < static_cast<long>(len)) {
                out[e] += (k % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any && k > 0) break;
    }
    return out;
}

} // namespace

FracPowerSeries::FracPowerSeries(long denom, Rational prec) : denom_(denom), prec_(std::move(prec))
{
    if (denom_ <= 0) throw std::invalid_argument("FracPowerSeries: denominator must be positive");
    prec_.canonicalize();
}

void FracPowerSeries::add_term(long numer, const Rational& c)
{
    if (c == 0) return;
    if (make_exponent(numer, denom_) >= prec_) return;
    auto it = terms_.find(numer);
    if (it == terms_.end()) {
        terms_.emplace(numer, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational FracPowerSeries::coefficient(const Rational& e) const
{
    if (e >= prec_) throw std::domain_error("coefficient requested beyond precision");
    Rational scaled = e * denom_;
    if (!is_integer(scaled)) return 0;
    auto it = terms_.find(to_long(scaled));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> FracPowerSeries::leading_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    return make_exponent(terms_.begin()->first, denom_);
}

FracPowerSeries FracPowerSeries::with_denom(long n) const
{
    if (n % denom_ != 0) throw std::invalid_argument("with_denom: new denominator must be a multiple");
    FracPowerSeries out(n, prec_);
    long f = n / denom_;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p * f, c);
    return out;
}

FracPowerSeries FracPowerSeries::truncated(const Rational& prec) const
{
    FracPowerSeries out(denom_, std::min(prec, prec_));
    for (const auto& [p, c] : terms_) out.add_term(p, c);
    return out;
}

bool FracPowerSeries::operator==(const FracPowerSeries& other) const
{
    if (prec_ != other.prec_) return false;
    long n = lcm(denom_, other.denom_);
    return with_denom(n).terms_ == other.with_denom(n).terms_;
}

FracPowerSeries operator+(const FracPowerSeries& a, const FracPowerSeries& b)
{
    long n = lcm(a.denom(), b.denom());
    FracPowerSeries out(n, std::min(a.prec(), b.prec()));
    auto an = a.with_denom(n);
    auto bn = b.with_denom(n);
    for (const auto& [p, c] : an.terms()) out.add_term(p, c);
    for (const auto& [p, c] : bn.terms()) out.add_term(p, c);
    return out;
}

FracPowerSeries operator-(const FracPowerSeries& a) { return Rational(-1) * a; }

FracPowerSeries operator-(const FracPowerSeries& a, const FracPowerSeries& b) { return a + (-b); }

FracPowerSeries operator*(const Rational& c, const FracPowerSeries& a)
{
    FracPowerSeries out(a.denom(), a.prec());
    for (const auto& [p, x] : a.terms()) out.add_term(p, c * x);
    return out;
}

FracPowerSeries operator*(const FracPowerSeries& a, const FracPowerSeries& b)
{
    long n = lcm(a.denom(), b.denom());
    auto va = a.leading_exponent();
    auto vb = b.leading_exponent();
    // A product term is reliable only while the error of either factor, shifted by the
    // other factor's valuation, stays above it.
    Rational prec;
    if (va && vb) {
        prec = std::min(a.prec() + *vb, b.prec() + *va);
    } else if (va) {
        prec = b.prec() + *va;
    } else if (vb) {
        prec = a.prec() + *vb;
    } else {
        prec = a.prec() + b.prec();
    }
    FracPowerSeries out(n, prec);
    auto an = a.with_denom(n);
    auto bn = b.with_denom(n);
    for (const auto& [p, x] : an.terms()) {
        for (const auto& [q, y] : bn.terms()) out.add_term(p + q, x * y);
    }
    return out;
}

FracPowerSeries inverse(const FracPowerSeries& a)
{
    auto v = a.leading_exponent();
    if (!v) throw std::domain_error("division by a series with no known nonzero term");
    long n = a.denom();
    long vn = a.terms().begin()->first;
    Rational rel = a.prec() - *v; // relative precision of the unit part
    FracPowerSeries out(n, rel - *v);
    // unit part u = sum_j u_j q^(j/N) with u_0 != 0
    std::vector<Rational> u;
    Rational rel_n = rel * n;
    long len = to_long(ceil_of(rel_n));
    u.assign(static_cast<std::size_t>(len), Rational(0));
    for (const auto& [p, c] : a.terms()) {
        long j = p - vn;
        if (j < len) u[static_cast<std::size_t>(j)] = c;
    }
    std::vector<Rational> w(static_cast<std::size_t>(len), Rational(0));
    Rational inv0 = 1 / u[0];
    w[0] = inv0;
    for (long k = 1; k < len; ++k) {
        Rational s = 0;
        for (long j = 1; j <= k; ++j) {
            if (u[static_cast<std::size_t>(j)] != 0) s += u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k - j)];
        }
        w[static_cast<std::size_t>(k)] = -s * inv0;
    }
    for (long k = 0; k < len; ++k) out.add_term(k - vn, w[static_cast<std::size_t>(k)]);
    return out;
}

FracPowerSeries operator/(const FracPowerSeries& a, const FracPowerSeries& b) { return a * inverse(b); }

FracPowerSeries pow(const FracPowerSeries& a, long k)
{
    if (k < 0) return pow(inverse(a), -k);
    auto v = a.leading_exponent();
    if (k == 0) {
        if (!v) throw std::domain_error("pow: zero-th power of an unknown series");
        FracPowerSeries one(a.denom(), a.prec() - *v);
        one.add_term(0, 1);
        return one;
    }
    FracPowerSeries result = a;
    FracPowerSeries base = a;
    long e = k - 1;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

FracPowerSeries eta_expand(const Rational& prec)
{
    if (prec <= Rational(1, 24)) throw std::domain_error("eta_expand: precision must exceed 1/24");
    FracPowerSeries out(24, prec);
    for (long k = 0;; ++k) {
        bool any = false;
        std::vector<long> ks = k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k};
        for (long kk : ks) {
            long numer = 1 + 12 * kk * (3 * kk - 1);
            if (make_exponent(numer, 24) < prec) {
                out.add_term(numer, (k % 2 == 0) ? 1 : -1);
                any = true;
            }
        }
        if (!any && k > 0) break;
    }
    return out;
}

Rational EtaQuotient::leading_exponent() const
{
    long s = 0;
    for (const auto& [d, r] : exps) s += d * r;
    return make_exponent(s, 24);
}

Rational EtaQuotient::weight() const
{
    long s = 0;
    for (const auto& [d, r] : exps) s += r;
    return make_exponent(s, 2);
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b)
{
    EtaQuotient out;
    out.level = lcm(a.level, b.level);
    out.exps = a.exps;
    for (const auto& [d, r] : b.exps) {
        out.exps[d] += r;
        if (out.exps[d] == 0) out.exps.erase(d);
    }
    return out;
}

EtaQuotient inverse(const EtaQuotient& a)
{
    EtaQuotient out = a;
    for (auto& [d, r] : out.exps) r = -r;
    return out;
}

EtaQuotient parse_eta_quotient(const std::string& text)
{
    EtaQuotient f;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("eta quotient entry needs 'd:r': " + item);
        long d = 0, r = 0;
        try {
            d = std::stol(item.substr(0, colon));
            r = std::stol(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("eta quotient entry needs integers: " + item);
        }
        if (d <= 0) throw std::invalid_argument("eta quotient index must be positive: " + item);
        f.level = lcm(f.level, d);
        if (r != 0) f.exps[d] += r;
    }
    if (f.exps.empty() && text.find(':') == std::string::npos) throw std::invalid_argument("empty eta quotient");
    return f;
}

std::string to_string(const EtaQuotient& f)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, r] : f.exps) {
        if (!first) os << ' ';
        os << "eta(" << d << "t)^" << r;
        first = false;
    }
    return first ? std::string("1") : os.str();
}

FracPowerSeries etaq_expand(const EtaQuotient& f, const Rational& prec)
{
    for (const auto& [d, r] : f.exps) {
        if (d <= 0 || f.level % d != 0) {
            throw std::invalid_argument("eta quotient of level " + std::to_string(f.level) + " has index " + std::to_string(d) +
                                        " not dividing the level");
        }
    }
    Rational lead = f.leading_exponent();
    if (prec <= lead) throw std::domain_error("etaq_expand: precision must exceed the leading exponent");
    std::size_t len = static_cast<std::size_t>(to_long(ceil_of(prec - lead)));
    Dense acc(len, 0);
    acc[0] = 1;
    for (const auto& [d, r] : f.exps) acc = dense_mul(acc, dense_pow(euler_product(d, len), r, len), len);
    long lead24 = to_long(lead * 24);
    FracPowerSeries out(24, prec);
    for (std::size_t j = 0; j < len; ++j) {
        if (acc[j] != 0) out.add_term(lead24 + 24 * static_cast<long>(j), Rational(acc[j]));
    }
    return out;
}

std::string render(const FracPowerSeries& s)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : s.terms()) {
        if (!first) os << " + ";
        os << orbidim::to_string(c) << " * q^(" << orbidim::to_string(make_exponent(p, s.denom())) << ")";
        first = false;
    }
    if (!first) os << " + ";
    os << "O(q^(" << orbidim::to_string(s.prec()) << "))";
    return os.str();
}

} // namespace orbidim::qseries
