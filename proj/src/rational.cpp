#include "orbidim/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbidim {

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    }
    return out;
}

bool valid_integer_text(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string s = strip(text);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_integer_text(num) || !valid_integer_text(den)) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + z.get_str());
    return z.get_si();
}

long to_long(const Rational& q)
{
    if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
    return to_long(q.get_num());
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

} // namespace orbidim
