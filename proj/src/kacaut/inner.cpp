#include "orbidim/kacaut.hpp"

#include "orbidim/arith.hpp"

#include <set>
#include <stdexcept>

namespace orbidim::kacaut {

namespace {

void check_coweight(const RootSystem& rs, const CoweightVec& h)
{
    if (h.size() != static_cast<std::size_t>(rs.rank)) {
        throw std::invalid_argument("coweight for " + rs.kind.name() + " needs " + std::to_string(rs.rank) + " coordinates");
    }
}

long denominator_lcm(long acc, const Rational& q) { return lcm(acc, to_long(Integer(q.get_den()))); }

} // namespace

InnerAut inner_from_coweight(const RootSystem& rs, const CoweightVec& h)
{
    check_coweight(rs, h);
    InnerAut res;
    for (const auto& alpha : rs.positive_roots) {
        Rational v = rs.root_value(alpha, h);
        res.order = denominator_lcm(res.order, v);
        if (is_integer(v)) res.fixed_roots.push_back(alpha);
    }
    // Simple roots of the integral subsystem are the fixed positive roots that are not sums of two.
    std::set<liealg::RootVec> fixed(res.fixed_roots.begin(), res.fixed_roots.end());
    std::vector<liealg::RootVec> simple;
    for (const auto& beta : res.fixed_roots) {
        bool decomposable = false;
        for (const auto& gamma : res.fixed_roots) {
            liealg::RootVec diff = beta;
            bool nonneg = true;
            for (std::size_t i = 0; i < diff.size(); ++i) {
                diff[i] -= gamma[i];
                if (diff[i] < 0) nonneg = false;
            }
            if (nonneg && diff != liealg::RootVec(diff.size(), 0) && fixed.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(beta);
    }
    std::size_t k = simple.size();
    IntMatrix c(k, std::vector<int>(k));
    std::vector<Rational> len(k);
    for (std::size_t a = 0; a < k; ++a) len[a] = rs.root_len2(simple[a]);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            Rational ip = 0;
            for (std::size_t i = 0; i < simple[a].size(); ++i) {
                if (simple[a][i] == 0) continue;
                for (std::size_t j = 0; j < simple[b].size(); ++j) {
                    if (simple[b][j] != 0) ip += simple[a][i] * simple[b][j] * rs.form[i][j];
                }
            }
            c[a][b] = static_cast<int>(to_long(2 * ip / len[b]));
        }
    }
    if (k > 0) res.fixed.simple = liealg::classify_cartan(c, len);
    res.fixed.abelian = rs.rank - static_cast<int>(k);
    long expected = rs.rank + 2 * static_cast<long>(res.fixed_roots.size());
    if (res.fixed.dim() != expected) throw std::logic_error("inner_from_coweight: inconsistent fixed subsystem");
    return res;
}

long module_order_bound(const RootSystem& rs, const CoweightVec& h)
{
    check_coweight(rs, h);
    std::size_t l = h.size();
    liealg::RatMatrix c(l, std::vector<Rational>(l));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) c[i][j] = rs.cartan[i][j];
    }
    liealg::RatMatrix cinv = liealg::inverse(c);
    long k = 1;
    for (std::size_t i = 0; i < l; ++i) {
        Rational x = 0;
        for (std::size_t j = 0; j < l; ++j) x += cinv[i][j] * h[j];
        k = denominator_lcm(k, x);
    }
    return k;
}

KacClass kac_class_of_coweight(const RootSystem& rs, const CoweightVec& h)
{
    check_coweight(rs, h);
    CoweightVec x = h;
    std::vector<int> theta_coroot = rs.coroot_coords(rs.highest_root);
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (x[static_cast<std::size_t>(i)] < 0) {
                x = liealg::reflect_coweight(rs, x, i);
                moved = true;
                break;
            }
        }
        if (moved) continue;
        Rational t = rs.root_value(rs.highest_root, x);
        if (t > 1) {
            Rational shift = t - 1;
            for (std::size_t j = 0; j < x.size(); ++j) x[j] -= shift * theta_coroot[j];
            continue;
        }
        break;
    }
    Rational s0 = 1 - rs.root_value(rs.highest_root, x);
    long m = denominator_lcm(1, s0);
    for (const auto& v : x) m = denominator_lcm(m, v);
    std::vector<int> s;
    s.push_back(static_cast<int>(to_long(s0 * m)));
    for (const auto& v : x) s.push_back(static_cast<int>(to_long(v * m)));
    return make_kac_class(rs.kind, 1, s);
}

} // namespace orbidim::kacaut
