#include "doctest.h"
#include "support.hpp"

#include "orbidim/arith.hpp"
#include "orbidim/modcurve.hpp"

using namespace orbidim;
using namespace orbidim::modcurve;
using orbidim::testing::Rng;

namespace {

Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

std::vector<std::string> reps(long n)
{
    std::vector<std::string> out;
    for (const auto& c : cusp_classes(n)) out.push_back(c.str());
    return out;
}

std::vector<long> widths(long n)
{
    std::vector<long> out;
    for (const auto& c : cusp_classes(n)) out.push_back(c.width);
    return out;
}

} // namespace

TEST_CASE("genus-zero levels")
{
    CHECK(genus_zero_levels() == std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25});
    CHECK(is_genus_zero_level(18));
    CHECK(is_genus_zero_level(1));
    CHECK_FALSE(is_genus_zero_level(11));
}

TEST_CASE("cusp classes at levels 1, 4 and 6")
{
    CHECK(reps(1) == std::vector<std::string>{"1/1"});
    CHECK(widths(1) == std::vector<long>{1});
    CHECK(reps(4) == std::vector<std::string>{"1/4", "1/2", "1/1"});
    CHECK(widths(4) == std::vector<long>{1, 1, 4});
    CHECK(reps(6) == std::vector<std::string>{"1/6", "1/3", "1/2", "1/1"});
    CHECK(widths(6) == std::vector<long>{1, 2, 3, 6});
}

TEST_CASE("cusp counts and width sums up to level 30")
{
    for (long n = 1; n <= 30; ++n) {
        CAPTURE(n);
        long count = 0;
        for (long c : orbidim::testing::divisors_of(n)) count += orbidim::testing::phi_of(std::gcd(c, n / c));
        auto cs = cusp_classes(n);
        CHECK(static_cast<long>(cs.size()) == count);
        long sum = 0;
        for (const auto& c : cs) sum += c.width;
        // index of Gamma0(n): n prod (1 + 1/p)
        Rational psi = n;
        for (long p = 2; p <= n; ++p) {
            bool prime = true;
            for (long k = 2; k * k <= p; ++k)
                if (p % k == 0) prime = false;
            if (prime && n % p == 0) psi *= Rational(p + 1, p);
        }
        CHECK(Rational(sum) == psi);
        CHECK(dedekind_psi(n) == sum);
    }
    CHECK(dedekind_psi(6) == 12);
    CHECK(dedekind_psi(2) == 3);
    CHECK(dedekind_psi(1) == 1);
}

TEST_CASE("cusp representatives are canonical")
{
    for (long n : {8L, 12L, 16L, 18L, 25L}) {
        for (const auto& c : cusp_classes(n)) {
            auto again = canonical_cusp(n, c.a + c.c * 7, c.c);
            CHECK(again == c);
            CHECK(parse_cusp(n, c.str()) == c);
        }
    }
    CHECK_THROWS(parse_cusp(6, "1/4"));
}

TEST_CASE("named hauptmoduln")
{
    CHECK(hauptmodul(2).exps == std::map<long, long>{{1, 24}, {2, -24}});
    CHECK(hauptmodul(6).exps == std::map<long, long>{{1, 5}, {2, -1}, {3, 1}, {6, -5}});
    CHECK(hauptmodul(8).exps == std::map<long, long>{{1, 4}, {2, -2}, {4, 2}, {8, -4}});
    CHECK(hauptmodul(4).exps == std::map<long, long>{{1, 8}, {4, -8}});
    for (long n : {2L, 3L, 5L, 7L, 13L}) {
        long r = 24 / (n - 1);
        CHECK(hauptmodul(n).exps == std::map<long, long>{{1, r}, {n, -r}});
    }
}

TEST_CASE("unsupported levels name the extension path")
{
    CHECK_THROWS_AS(hauptmodul(9), NotImplementedLevel);
    try {
        hauptmodul(25);
        FAIL("expected NotImplementedLevel");
    } catch (const NotImplementedLevel& e) {
        CHECK(std::string(e.what()).find("Conway-Norton") != std::string::npos);
    }
    CHECK_THROWS_AS(hauptmodul(11), std::domain_error);
}

TEST_CASE("named cusp functions")
{
    CHECK(cusp_function(4, parse_cusp(4, "1/2")).exps == std::map<long, long>{{1, 8}, {2, -24}, {4, 16}});
    CHECK(cusp_function(2, parse_cusp(2, "1/1")).exps == std::map<long, long>{{1, -24}, {2, 24}});
    CHECK(cusp_function(8, parse_cusp(8, "1/4")).exps == std::map<long, long>{{2, 4}, {4, -12}, {8, 8}});
}

TEST_CASE("divisor orders of named functions")
{
    auto f11 = cusp_function(2, parse_cusp(2, "1/1"));
    CHECK(divisor_order(f11, parse_cusp(2, "1/1")) == q(-1, 2));
    auto f12 = cusp_function(4, parse_cusp(4, "1/2"));
    CHECK(divisor_order(f12, parse_cusp(4, "1/2")) == -1);
    CHECK(divisor_order(f12, parse_cusp(4, "1/1")) == 0);
    CHECK(divisor_order(f12, parse_cusp(4, "1/4")) == 1);
    qseries::EtaQuotient one{6, {}};
    for (const auto& c : cusp_classes(6)) CHECK(divisor_order(one, c) == 0);
}

TEST_CASE("every named cusp function satisfies the divisor contract")
{
    for (long n : supported_levels()) {
        auto cs = cusp_classes(n);
        for (const auto& s : cs) {
            auto f = cusp_function(n, s);
            CAPTURE(n);
            CAPTURE(s.str());
            CHECK(f.weight() == 0);
            Rational degree = 0;
            for (const auto& t : cs) {
                Rational ord = divisor_order(f, t);
                degree += ord * t.width;
                if (t == s) {
                    CHECK(ord == Rational(-1, t.width));
                } else if (is_infinity(n, t)) {
                    CHECK(ord == 1);
                } else if (is_infinity(n, s) && t.c == 1) {
                    CHECK(ord == Rational(1, n));
                } else {
                    CHECK(ord == 0);
                }
            }
            CHECK(degree == 0);
            auto series = qseries::etaq_expand(f, 3);
            REQUIRE(series.leading_exponent().has_value());
            CHECK(*series.leading_exponent() == divisor_order(f, parse_cusp(n, "1/" + std::to_string(n))));
        }
    }
}

TEST_CASE("order at infinity matches the leading exponent on random quotients")
{
    Rng rng(0x0d1f5u);
    const std::vector<long> levels = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13};
    int tested = 0;
    while (tested < 25) {
        long n = rng.pick(levels);
        std::map<long, long> exps;
        for (long d : orbidim::testing::divisors_of(n)) exps[d] = rng.uniform(-5, 5);
        // force weight 0 by balancing on d = 1
        long total = 0;
        for (const auto& [d, r] : exps)
            if (d != 1) total += r;
        exps[1] = -total;
        std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
        qseries::EtaQuotient f{n, exps};
        REQUIRE(f.weight() == 0);
        auto s = qseries::etaq_expand(f, f.leading_exponent() + 2);
        REQUIRE(s.leading_exponent().has_value());
        CHECK(*s.leading_exponent() == divisor_order(f, parse_cusp(n, "1/" + std::to_string(n))));
        ++tested;
    }
}

TEST_CASE("divisor json carries exact fractions")
{
    auto j = divisor_json(divisor(cusp_function(2, parse_cusp(2, "1/1")), 2));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    bool found = false;
    for (const auto& e : j) {
        if (e["cusp"] == "1/1") {
            CHECK(e["order"] == "-1/2");
            CHECK(e["width"] == 2);
            found = true;
        }
    }
    CHECK(found);
}
