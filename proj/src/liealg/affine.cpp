#include "orbidim/liealg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace orbidim::liealg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

long read_number(std::string_view text, std::size_t& i)
{
    if (i >= text.size() || !is_digit(text[i])) {
        throw std::invalid_argument("expected a number in '" + std::string(text) + "'");
    }
    long v = 0;
    while (i < text.size() && is_digit(text[i])) {
        v = v * 10 + (text[i] - '0');
        if (v > 100000) throw std::invalid_argument("number too large in '" + std::string(text) + "'");
        ++i;
    }
    return v;
}

} // namespace

std::vector<AlgebraToken> tokenize_algebra(std::string_view text)
{
    std::vector<AlgebraToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '*' || c == '_') {
            ++i;
            continue;
        }
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u < 'A' || u > 'G') throw std::invalid_argument("unexpected '" + std::string(1, c) + "' in '" + std::string(text) + "'");
        ++i;
        AlgebraToken tok;
        if (u == 'C' && (i >= text.size() || !is_digit(text[i]))) {
            tok.abelian = true;
        } else {
            long r = read_number(text, i);
            tok.kind = Kind::parse(std::string(1, u) + std::to_string(r));
            if (i < text.size() && text[i] == ',') {
                ++i;
                tok.level = read_number(text, i);
                if (tok.level <= 0) throw std::invalid_argument("level must be positive in '" + std::string(text) + "'");
            }
        }
        if (i < text.size() && text[i] == '^') {
            ++i;
            tok.mult = read_number(text, i);
            if (tok.mult <= 0) throw std::invalid_argument("multiplicity must be positive in '" + std::string(text) + "'");
        }
        out.push_back(tok);
    }
    return out;
}

AffineStructure parse_structure(std::string_view text)
{
    AffineStructure s;
    for (const auto& tok : tokenize_algebra(text)) {
        if (tok.abelian) throw std::invalid_argument("affine structure cannot contain abelian summands: '" + std::string(text) + "'");
        for (long m = 0; m < tok.mult; ++m) s.factors.push_back(AffineFactor{tok.kind, tok.level});
    }
    if (s.factors.empty()) throw std::invalid_argument("empty affine structure");
    return s;
}

long AffineStructure::dim() const
{
    long d = 0;
    for (const auto& f : factors) d += root_system(f.kind).dim;
    return d;
}

int AffineStructure::rank() const
{
    int r = 0;
    for (const auto& f : factors) r += f.kind.rank;
    return r;
}

std::string AffineStructure::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        os << factors[i].kind.name() << ',' << factors[i].level;
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

ConstraintCheck schellekens_constraint(const AffineStructure& s)
{
    ConstraintCheck c;
    c.expected = frac(s.dim() - 24, 24);
    c.holds = !s.factors.empty();
    for (const auto& f : s.factors) {
        Rational r(root_system(f.kind).dual_coxeter, f.level);
        r.canonicalize();
        c.ratios.push_back(r);
        if (r != c.expected) c.holds = false;
    }
    return c;
}

std::string weight_to_string(const WeightVec& w)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ']';
    return os.str();
}

std::string coweight_to_string(const CoweightVec& h)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << to_string(h[i]);
    os << ']';
    return os.str();
}

namespace {

std::vector<std::string> split_vector(std::string_view text)
{
    std::string s(text);
    std::string body;
    for (char c : s) {
        if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
    }
    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty vector: '" + s + "'");
    return parts;
}

} // namespace

WeightVec parse_weight(std::string_view text)
{
    WeightVec w;
    for (const auto& p : split_vector(text)) w.push_back(to_long(parse_rational(p)));
    return w;
}

CoweightVec parse_coweight(std::string_view text)
{
    CoweightVec h;
    for (const auto& p : split_vector(text)) h.push_back(parse_rational(p));
    return h;
}

} // namespace orbidim::liealg
