#include "orbidim/modcurve.hpp"

#include "orbidim/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbidim::modcurve {

namespace {

using qseries::EtaQuotient;

EtaQuotient quotient(long n, std::map<long, long> exps)
{
    EtaQuotient f;
    f.level = n;
    f.exps = std::move(exps);
    return f;
}

// Keyed by (n, c) with a = 1 for every cusp that occurs at these levels.
const std::map<std::pair<long, long>, std::map<long, long>>& cusp_table()
{
    static const std::map<std::pair<long, long>, std::map<long, long>> table = [] {
        std::map<std::pair<long, long>, std::map<long, long>> t;
        for (long p : {2L, 3L, 5L, 7L, 13L}) {
            long e = 24 / (p - 1);
            t[{p, p}] = {{1, e}, {p, -e}};
            t[{p, 1}] = {{1, -e}, {p, e}};
        }
        t[{4, 4}] = {{1, 8}, {4, -8}};
        t[{4, 2}] = {{1, 8}, {2, -24}, {4, 16}};
        t[{4, 1}] = {{1, -8}, {4, 8}};
        t[{6, 6}] = {{1, 5}, {2, -1}, {3, 1}, {6, -5}};
        t[{6, 3}] = {{1, 3}, {2, -3}, {3, -9}, {6, 9}};
        t[{6, 2}] = {{1, 4}, {2, -8}, {3, -4}, {6, 8}};
        t[{6, 1}] = {{1, -5}, {2, 1}, {3, -1}, {6, 5}};
        t[{8, 8}] = {{1, 4}, {2, -2}, {4, 2}, {8, -4}};
        t[{8, 4}] = {{2, 4}, {4, -12}, {8, 8}};
        t[{8, 2}] = {{1, 4}, {2, -10}, {4, 2}, {8, 4}};
        t[{8, 1}] = {{1, -4}, {2, 2}, {4, -2}, {8, 4}};
        return t;
    }();
    return table;
}

} // namespace

const std::vector<long>& genus_zero_levels()
{
    static const std::vector<long> levels{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    return levels;
}

bool is_genus_zero_level(long n)
{
    const auto& g = genus_zero_levels();
    return std::find(g.begin(), g.end(), n) != g.end();
}

const std::vector<long>& supported_levels()
{
    static const std::vector<long> levels{2, 3, 4, 5, 6, 7, 8, 13};
    return levels;
}

std::vector<Cusp> cusp_classes(long n)
{
    if (n <= 0) throw std::domain_error("cusp_classes: level must be positive");
    std::vector<Cusp> out;
    auto divs = divisors(n);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        long c = *it;
        long g = gcd(c, n / c);
        long width = (n / c) / g;
        for (long u = 1; u <= g; ++u) {
            if (gcd(u, g) != 1) continue;
            long a = u;
            while (gcd(a, c) != 1) a += g;
            out.push_back(Cusp{a, c, width});
        }
    }
    return out;
}

Cusp canonical_cusp(long n, long a, long c)
{
    if (c <= 0 || n % c != 0) throw std::invalid_argument("cusp denominator must be a positive divisor of " + std::to_string(n));
    if (gcd(a, c) != 1) throw std::invalid_argument("cusp numerator must be coprime to its denominator");
    long g = gcd(c, n / c);
    long r = ((a % g) + g) % g;
    for (const auto& s : cusp_classes(n)) {
        if (s.c == c && ((s.a % g) + g) % g == r) return s;
    }
    throw std::logic_error("canonical_cusp: no representative found");
}

Cusp parse_cusp(long n, const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("cusp must be written a/c: " + text);
    long a = 0, c = 0;
    try {
        a = std::stol(text.substr(0, slash));
        c = std::stol(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("cusp must be written a/c: " + text);
    }
    return canonical_cusp(n, a, c);
}

bool is_infinity(long n, const Cusp& s) { return s.c == n; }

EtaQuotient cusp_function(long n, const Cusp& s)
{
    if (!is_genus_zero_level(n)) {
        throw std::domain_error(std::to_string(n) + " is not a genus-zero level");
    }
    const auto& table = cusp_table();
    auto it = table.find({n, s.c});
    if (it == table.end()) {
        throw NotImplementedLevel("level " + std::to_string(n) +
                                  " has no tabulated eta-quotient Hauptmodul; extending to it needs the"
                                  " Conway-Norton replicable-function table entry for that level");
    }
    return quotient(n, it->second);
}

EtaQuotient hauptmodul(long n)
{
    return cusp_function(n, Cusp{1, n, 1});
}

Rational divisor_order(const EtaQuotient& f, const Cusp& s)
{
    Rational total = 0;
    for (const auto& [d, r] : f.exps) {
        long g = gcd(s.c, d);
        total += frac(g * g * r, d);
    }
    total /= 24;
    total.canonicalize();
    return total;
}

std::vector<DivisorEntry> divisor(const EtaQuotient& f, long n)
{
    std::vector<DivisorEntry> out;
    for (const auto& s : cusp_classes(n)) out.push_back(DivisorEntry{s, divisor_order(f, s)});
    return out;
}

nlohmann::json divisor_json(const std::vector<DivisorEntry>& div)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : div) {
        arr.push_back({{"cusp", e.cusp.str()}, {"width", e.cusp.width}, {"order", to_string(e.order)}});
    }
    return arr;
}

} // namespace orbidim::modcurve
