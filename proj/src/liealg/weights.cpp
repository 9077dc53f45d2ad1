#include "orbidim/liealg.hpp"

#include <map>
#include <stdexcept>

namespace orbidim::liealg {

namespace {

void check_size(const RootSystem& rs, std::size_t n, const char* what)
{
    if (n != static_cast<std::size_t>(rs.rank)) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rs.rank) + " coordinates for " +
                                    rs.kind.name() + ", got " + std::to_string(n));
    }
}

// Integer data scaled by 6 so that G2's short length 2/3 stays integral.
struct Scaled {
    std::vector<long> len6;             // 6 (a_i, a_i) / 2 = 3 (a_i, a_i)
    std::vector<std::vector<long>> form6; // 6 (a_i, a_j)
};

Scaled scaled(const RootSystem& rs)
{
    Scaled s;
    std::size_t l = static_cast<std::size_t>(rs.rank);
    s.len6.resize(l);
    s.form6.assign(l, std::vector<long>(l));
    for (std::size_t i = 0; i < l; ++i) {
        s.len6[i] = to_long(3 * rs.len2[i]);
        for (std::size_t j = 0; j < l; ++j) s.form6[i][j] = to_long(6 * rs.form[i][j]);
    }
    return s;
}

} // namespace

Rational pairing(const RootSystem& rs, const WeightVec& lambda, const CoweightVec& h)
{
    check_size(rs, lambda.size(), "pairing");
    check_size(rs, h.size(), "pairing");
    // L_i(L_j^v) = 2 (L_i, L_j) / (a_j, a_j)
    Rational v = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (lambda[i] == 0) continue;
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (h[j] != 0) v += lambda[i] * 2 * rs.gram_weights[i][j] / rs.len2[j] * h[j];
        }
    }
    v.canonicalize();
    return v;
}

Rational weight_inner(const RootSystem& rs, const WeightVec& a, const WeightVec& b)
{
    check_size(rs, a.size(), "weight_inner");
    check_size(rs, b.size(), "weight_inner");
    Rational v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) v += a[i] * b[j] * rs.gram_weights[i][j];
        }
    }
    return v;
}

Rational coweight_inner(const RootSystem& rs, const CoweightVec& a, const CoweightVec& b)
{
    check_size(rs, a.size(), "coweight_inner");
    check_size(rs, b.size(), "coweight_inner");
    Rational v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) v += a[i] * b[j] * rs.gram_coweights[i][j];
        }
    }
    return v;
}

CoweightVec reflect_coweight(const RootSystem& rs, const CoweightVec& h, int i)
{
    CoweightVec out = h;
    Rational c = h[static_cast<std::size_t>(i)];
    if (c == 0) return out;
    for (std::size_t j = 0; j < out.size(); ++j) {
        int a = rs.cartan[j][static_cast<std::size_t>(i)];
        if (a != 0) out[j] -= c * a;
    }
    return out;
}

WeightVec reflect_weight(const RootSystem& rs, const WeightVec& w, int i)
{
    WeightVec out = w;
    long m = w[static_cast<std::size_t>(i)];
    if (m == 0) return out;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= m * rs.cartan[static_cast<std::size_t>(i)][j];
    return out;
}

AntidominantResult weyl_antidominant(const RootSystem& rs, const CoweightVec& h)
{
    check_size(rs, h.size(), "weyl_antidominant");
    AntidominantResult res{h, {}};
    for (;;) {
        int pos = -1;
        for (int i = 0; i < rs.rank; ++i) {
            if (res.h[static_cast<std::size_t>(i)] > 0) {
                pos = i;
                break;
            }
        }
        if (pos < 0) break;
        res.h = reflect_coweight(rs, res.h, pos);
        res.word.push_back(pos);
    }
    return res;
}

std::vector<WeightMultiplicity> weight_system(const RootSystem& rs, const WeightVec& lambda)
{
    check_size(rs, lambda.size(), "weight_system");
    for (long m : lambda) {
        if (m < 0) throw std::domain_error("weight_system: highest weight must be dominant");
    }
    std::size_t l = lambda.size();
    Scaled sc = scaled(rs);
    // beta = lambda - mu in simple-root coordinates; depth = height of beta.
    std::map<RootVec, long long> mult;
    std::vector<WeightMultiplicity> out;
    auto weight_of = [&](const RootVec& beta) {
        WeightVec mu = lambda;
        for (std::size_t i = 0; i < l; ++i) {
            if (beta[i] == 0) continue;
            for (std::size_t j = 0; j < l; ++j) mu[j] -= static_cast<long>(beta[i]) * rs.cartan[i][j];
        }
        return mu;
    };
    std::vector<WeightVec> root_weights;
    for (const auto& alpha : rs.positive_roots) root_weights.push_back(rs.root_weight(alpha));
    RootVec zero(l, 0);
    mult[zero] = 1;
    out.push_back({lambda, 1});
    std::vector<RootVec> layer{zero};
    while (!layer.empty()) {
        std::map<RootVec, long long> next;
        for (const auto& b : layer) {
            for (std::size_t i = 0; i < l; ++i) {
                RootVec c = b;
                ++c[i];
                next.emplace(c, 0);
            }
        }
        std::vector<RootVec> new_layer;
        for (auto& [beta, m] : next) {
            WeightVec mu = weight_of(beta);
            // 6 * (2 (lambda + delta, beta) - (beta, beta))
            long long den = 0;
            for (std::size_t i = 0; i < l; ++i) den += 2LL * (lambda[i] + 1) * beta[i] * sc.len6[i];
            for (std::size_t i = 0; i < l; ++i) {
                for (std::size_t j = 0; j < l; ++j) den -= static_cast<long long>(beta[i]) * beta[j] * sc.form6[i][j];
            }
            if (den <= 0) continue;
            long long num = 0;
            for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
                const RootVec& alpha = rs.positive_roots[r];
                const WeightVec& aw = root_weights[r];
                RootVec bb = beta;
                for (long k = 1;; ++k) {
                    bool ok = true;
                    for (std::size_t i = 0; i < l; ++i) {
                        bb[i] -= alpha[i];
                        if (bb[i] < 0) ok = false;
                    }
                    if (!ok) break;
                    auto it = mult.find(bb);
                    if (it == mult.end()) continue;
                    // 6 (mu + k alpha, alpha)
                    long long ip = 0;
                    for (std::size_t i = 0; i < l; ++i) {
                        if (alpha[i] != 0) ip += (mu[i] + k * aw[i]) * alpha[i] * sc.len6[i];
                    }
                    num += 2 * it->second * ip;
                }
            }
            if (num % den != 0) throw std::logic_error("weight_system: non-integral multiplicity");
            m = num / den;
            if (m > 0) {
                mult[beta] = m;
                out.push_back({mu, m});
                new_layer.push_back(beta);
            }
        }
        layer = std::move(new_layer);
    }
    return out;
}

Integer weyl_dimension(const RootSystem& rs, const WeightVec& lambda)
{
    check_size(rs, lambda.size(), "weyl_dimension");
    Scaled sc = scaled(rs);
    Rational d = 1;
    for (const auto& alpha : rs.positive_roots) {
        long num = 0, den = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            num += (lambda[i] + 1) * alpha[i] * sc.len6[i];
            den += alpha[i] * sc.len6[i];
        }
        d *= frac(num, den);
    }
    d.canonicalize();
    if (!is_integer(d)) throw std::domain_error("weyl_dimension: weight is not integral dominant");
    return d.get_num();
}

long level_of(const RootSystem& rs, const WeightVec& lambda)
{
    check_size(rs, lambda.size(), "level_of");
    long s = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * rs.comarks[i];
    return s;
}

std::vector<WeightVec> dominant_weights_of_level(const RootSystem& rs, long k)
{
    if (k < 0) throw std::domain_error("dominant_weights_of_level: negative level");
    std::vector<WeightVec> out;
    WeightVec cur(static_cast<std::size_t>(rs.rank), 0);
    auto rec = [&](auto&& self, std::size_t i, long budget) -> void {
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (long m = 0; m * rs.comarks[i] <= budget; ++m) {
            cur[i] = m;
            self(self, i + 1, budget - m * rs.comarks[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, k);
    return out;
}

Rational affine_conformal_weight(const RootSystem& rs, long k, const WeightVec& lambda)
{
    if (k <= 0) throw std::domain_error("affine_conformal_weight: level must be positive");
    if (level_of(rs, lambda) > k) throw std::domain_error("affine_conformal_weight: weight exceeds the level");
    WeightVec shifted = lambda;
    for (auto& m : shifted) m += 2;
    Rational v = weight_inner(rs, lambda, shifted) / (2 * (k + rs.dual_coxeter));
    v.canonicalize();
    return v;
}

} // namespace orbidim::liealg
