#include "orbidim/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbidim::liealg {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void check_kind(Kind k)
{
    int r = k.rank;
    bool ok = false;
    switch (k.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
    }
    if (!ok || r > kMaxRank) throw std::invalid_argument("unsupported simple Lie algebra " + k.name());
}

struct Diagram {
    std::vector<Rational> len2;
    std::vector<std::pair<int, int>> edges; // 0-based
};

Diagram diagram_of(Kind k)
{
    int l = k.rank;
    Diagram d;
    d.len2.assign(static_cast<std::size_t>(l), Rational(2));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
    };
    switch (k.family) {
    case Family::A:
        chain(l);
        break;
    case Family::B:
        chain(l);
        d.len2[static_cast<std::size_t>(l - 1)] = 1;
        break;
    case Family::C:
        chain(l);
        for (int i = 0; i + 1 < l; ++i) d.len2[static_cast<std::size_t>(i)] = 1;
        break;
    case Family::D:
        chain(l - 1);
        d.edges.emplace_back(l - 3, l - 1);
        break;
    case Family::E:
        d.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        if (l >= 7) d.edges.emplace_back(5, 6);
        if (l >= 8) d.edges.emplace_back(6, 7);
        break;
    case Family::F:
        chain(4);
        d.len2 = {2, 2, 1, 1};
        break;
    case Family::G:
        chain(2);
        d.len2 = {Rational(2, 3), 2};
        break;
    }
    return d;
}

} // namespace

std::string Kind::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

Kind Kind::parse(std::string_view text)
{
    if (text.size() < 2) throw std::invalid_argument("not a Lie algebra kind: '" + std::string(text) + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    auto pos = std::string_view("ABCDEFG").find(c);
    if (pos == std::string_view::npos) throw std::invalid_argument("not a Lie algebra kind: '" + std::string(text) + "'");
    int r = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("not a Lie algebra kind: '" + std::string(text) + "'");
        }
        r = r * 10 + (text[i] - '0');
        if (r > 1000) break;
    }
    Kind k{static_cast<Family>(pos), r};
    check_kind(k);
    return k;
}

Kind Kind::canonical() const
{
    if (family == Family::C && rank == 2) return Kind{Family::B, 2};
    if (family == Family::D && rank == 3) return Kind{Family::A, 3};
    return *this;
}

RatMatrix inverse(const RatMatrix& m)
{
    std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<RootVec> positive_roots_of(const IntMatrix& cartan)
{
    std::size_t l = cartan.size();
    std::vector<RootVec> roots;
    std::set<RootVec> known;
    std::vector<RootVec> layer;
    for (std::size_t i = 0; i < l; ++i) {
        RootVec e(l, 0);
        e[i] = 1;
        layer.push_back(e);
    }
    while (!layer.empty()) {
        for (const auto& r : layer) {
            roots.push_back(r);
            known.insert(r);
        }
        std::set<RootVec> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < l; ++i) {
                long pairing = 0; // <beta, a_i^v>
                for (std::size_t j = 0; j < l; ++j) pairing += static_cast<long>(beta[j]) * cartan[j][i];
                long p = 0;
                RootVec down = beta;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down)) break;
                    ++p;
                }
                long q = p - pairing;
                if (q > 0) {
                    RootVec up = beta;
                    ++up[i];
                    next.insert(up);
                }
            }
            if (roots.size() > 100000) throw std::domain_error("positive_roots_of: not of finite type");
        }
        layer.assign(next.begin(), next.end());
    }
    return roots;
}

std::vector<Kind> classify_cartan(const IntMatrix& cartan, const std::vector<Rational>& len2)
{
    std::size_t n = cartan.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (comp[v] < 0 && cartan[u][v] != 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Kind> kinds;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (comp[i] == c) idx.push_back(i);
        }
        int r = static_cast<int>(idx.size());
        IntMatrix sub(idx.size(), std::vector<int>(idx.size()));
        std::vector<Rational> sl;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            sl.push_back(len2[idx[a]]);
            for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = cartan[idx[a]][idx[b]];
        }
        auto roots = positive_roots_of(sub);
        long np = static_cast<long>(roots.size());
        Rational maxlen = *std::max_element(sl.begin(), sl.end());
        long nlong = 0;
        for (const auto& rt : roots) {
            Rational q = 0;
            for (std::size_t a = 0; a < rt.size(); ++a) {
                for (std::size_t b = 0; b < rt.size(); ++b) {
                    if (rt[a] && rt[b]) q += rt[a] * rt[b] * sub[a][b] * sl[b] / 2;
                }
            }
            if (q == maxlen) ++nlong;
        }
        Kind k;
        if (nlong == np) {
            if (np == static_cast<long>(r) * (r + 1) / 2) {
                k = {Family::A, r};
            } else if (r >= 4 && np == static_cast<long>(r) * (r - 1)) {
                k = {Family::D, r};
            } else if ((r == 6 && np == 36) || (r == 7 && np == 63) || (r == 8 && np == 120)) {
                k = {Family::E, r};
            } else {
                throw std::domain_error("classify_cartan: unrecognised simply-laced component");
            }
        } else if (r == 2 && np == 4) {
            k = {Family::B, 2};
        } else if (r == 2 && np == 6) {
            k = {Family::G, 2};
        } else if (r == 4 && np == 24) {
            k = {Family::F, 4};
        } else if (np == static_cast<long>(r) * r) {
            k = {nlong > np - nlong ? Family::B : Family::C, r};
        } else {
            throw std::domain_error("classify_cartan: unrecognised component");
        }
        kinds.push_back(k.canonical());
    }
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

RootSystem build_root_system(Kind kind)
{
    check_kind(kind);
    Diagram d = diagram_of(kind);
    RootSystem rs;
    rs.kind = kind;
    rs.rank = kind.rank;
    std::size_t l = static_cast<std::size_t>(kind.rank);
    rs.len2 = d.len2;
    rs.form.assign(l, std::vector<Rational>(l, Rational(0)));
    for (std::size_t i = 0; i < l; ++i) rs.form[i][i] = d.len2[i];
    for (auto [a, b] : d.edges) {
        Rational v = -std::max(d.len2[static_cast<std::size_t>(a)], d.len2[static_cast<std::size_t>(b)]) / 2;
        rs.form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        rs.form[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
    }
    rs.cartan.assign(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) rs.cartan[i][j] = static_cast<int>(to_long(2 * rs.form[i][j] / rs.len2[j]));
    }
    rs.positive_roots = positive_roots_of(rs.cartan);
    rs.highest_root = rs.positive_roots.back();
    rs.marks = rs.highest_root;
    rs.comarks.resize(l);
    int sum_marks = 0, sum_comarks = 0;
    for (std::size_t i = 0; i < l; ++i) {
        rs.comarks[i] = static_cast<int>(to_long(rs.marks[i] * rs.len2[i] / 2));
        sum_marks += rs.marks[i];
        sum_comarks += rs.comarks[i];
    }
    rs.coxeter = 1 + sum_marks;
    rs.dual_coxeter = 1 + sum_comarks;
    rs.dim = static_cast<long>(l + 2 * rs.positive_roots.size());

    RatMatrix c(l, std::vector<Rational>(l));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) c[i][j] = rs.cartan[i][j];
    }
    RatMatrix cinv = inverse(c);
    rs.gram_weights.assign(l, std::vector<Rational>(l));
    rs.gram_coweights.assign(l, std::vector<Rational>(l));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t k = 0; k < l; ++k) {
            rs.gram_weights[i][k] = cinv[i][k] * rs.len2[k] / 2;
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t k = 0; k < l; ++k) {
            rs.gram_coweights[i][k] = 4 * rs.gram_weights[i][k] / (rs.len2[i] * rs.len2[k]);
        }
    }
    return rs;
}

const RootSystem& root_system(Kind kind)
{
    static std::mutex mu;
    static std::map<Kind, RootSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(kind);
    if (it == cache.end()) it = cache.emplace(kind, build_root_system(kind)).first;
    return it->second;
}

Rational RootSystem::root_value(const RootVec& alpha, const CoweightVec& h) const
{
    Rational v = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) v += alpha[i] * h[i];
    }
    return v;
}

Rational RootSystem::root_len2(const RootVec& alpha) const
{
    Rational q = 0;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        if (alpha[a] == 0) continue;
        for (std::size_t b = 0; b < alpha.size(); ++b) {
            if (alpha[b] != 0) q += alpha[a] * alpha[b] * form[a][b];
        }
    }
    return q;
}

std::vector<int> RootSystem::coroot_coords(const RootVec& alpha) const
{
    Rational l2 = root_len2(alpha);
    std::vector<int> out(static_cast<std::size_t>(rank));
    for (std::size_t j = 0; j < out.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] != 0) s += alpha[i] * form[i][j];
        }
        out[j] = static_cast<int>(to_long(2 * s / l2));
    }
    return out;
}

WeightVec RootSystem::root_weight(const RootVec& alpha) const
{
    WeightVec w(static_cast<std::size_t>(rank), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += static_cast<long>(alpha[i]) * cartan[i][j];
    }
    return w;
}

} // namespace orbidim::liealg
