#include "orbidim/kacaut.hpp"

#include "orbidim/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbidim::kacaut {

using liealg::Family;

long FixedAlgebra::dim() const
{
    long d = abelian;
    for (const auto& k : simple) d += liealg::root_system(k).dim;
    return d;
}

int FixedAlgebra::rank() const
{
    int r = abelian;
    for (const auto& k : simple) r += k.rank;
    return r;
}

std::string FixedAlgebra::str() const
{
    if (simple.empty() && abelian == 0) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < simple.size();) {
        std::size_t j = i;
        while (j < simple.size() && simple[j] == simple[i]) ++j;
        os << simple[i].name();
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    if (abelian == 1) os << 'C';
    if (abelian > 1) os << "C^" << abelian;
    return os.str();
}

FixedAlgebra FixedAlgebra::parse(std::string_view text)
{
    FixedAlgebra f;
    std::string t(text);
    if (t == "0") return f;
    for (const auto& tok : liealg::tokenize_algebra(text)) {
        if (tok.abelian) {
            f.abelian += static_cast<int>(tok.mult);
        } else {
            for (long m = 0; m < tok.mult; ++m) f.simple.push_back(tok.kind.canonical());
        }
    }
    std::sort(f.simple.begin(), f.simple.end());
    return f;
}

FixedAlgebra& FixedAlgebra::operator+=(const FixedAlgebra& other)
{
    simple.insert(simple.end(), other.simple.begin(), other.simple.end());
    std::sort(simple.begin(), simple.end());
    abelian += other.abelian;
    return *this;
}

namespace {

struct DiagramSpec {
    std::vector<Rational> len2;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;
};

DiagramSpec chain_spec(std::vector<Rational> len2, std::vector<int> labels)
{
    DiagramSpec d;
    d.len2 = std::move(len2);
    d.labels = std::move(labels);
    for (int i = 0; i + 1 < static_cast<int>(d.len2.size()); ++i) d.edges.emplace_back(i, i + 1);
    return d;
}

DiagramSpec twisted_spec(Kind kind, int twist)
{
    int l = kind.rank;
    if (twist == 3) {
        return chain_spec({1, 1, 3}, {1, 2, 1});
    }
    if (kind.family == Family::E) {
        return chain_spec({1, 1, 1, 2, 2}, {1, 2, 3, 2, 1});
    }
    if (kind.family == Family::A && l % 2 == 0) {
        int m = l / 2;
        std::vector<Rational> len(static_cast<std::size_t>(m + 1), Rational(2));
        std::vector<int> lab(static_cast<std::size_t>(m + 1), 2);
        len.front() = 1;
        len.back() = 4;
        lab.back() = 1;
        return chain_spec(len, lab);
    }
    if (kind.family == Family::A && l >= 5) {
        int m = (l + 1) / 2;
        DiagramSpec d;
        d.len2.assign(static_cast<std::size_t>(m + 1), Rational(1));
        d.len2.back() = 2;
        d.labels.assign(static_cast<std::size_t>(m + 1), 2);
        d.labels[0] = d.labels[1] = d.labels.back() = 1;
        d.edges = {{0, 2}, {1, 2}};
        for (int i = 2; i < m; ++i) d.edges.emplace_back(i, i + 1);
        return d;
    }
    // D_{m+1} (including A3 = D3)
    int m = (kind.family == Family::A) ? 2 : l - 1;
    std::vector<Rational> len(static_cast<std::size_t>(m + 1), Rational(2));
    len.front() = 1;
    len.back() = 1;
    return chain_spec(len, std::vector<int>(static_cast<std::size_t>(m + 1), 1));
}

IntMatrix cartan_from_form(const liealg::RatMatrix& form, const std::vector<Rational>& len2)
{
    IntMatrix c(form.size(), std::vector<int>(form.size()));
    for (std::size_t i = 0; i < form.size(); ++i) {
        for (std::size_t j = 0; j < form.size(); ++j) c[i][j] = static_cast<int>(to_long(2 * form[i][j] / len2[j]));
    }
    return c;
}

std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& c)
{
    int n = static_cast<int>(c.size());
    // BFS order so that every node after the first touches an earlier one.
    std::vector<int> order{0};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int v = 0; v < n; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && c[static_cast<std::size_t>(order[k])][static_cast<std::size_t>(v)] != 0) {
                seen[static_cast<std::size_t>(v)] = true;
                order.push_back(v);
            }
        }
    }
    std::vector<std::vector<int>> result;
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            result.push_back(perm);
            return;
        }
        int u = order[k];
        for (int img = 0; img < n; ++img) {
            if (used[static_cast<std::size_t>(img)]) continue;
            bool ok = c[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(img)][static_cast<std::size_t>(img)];
            for (std::size_t j = 0; ok && j < k; ++j) {
                int v = order[j];
                int pv = perm[static_cast<std::size_t>(v)];
                ok = c[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == c[static_cast<std::size_t>(img)][static_cast<std::size_t>(pv)] &&
                     c[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(pv)][static_cast<std::size_t>(img)];
            }
            if (!ok) continue;
            perm[static_cast<std::size_t>(u)] = img;
            used[static_cast<std::size_t>(img)] = true;
            self(self, k + 1);
            used[static_cast<std::size_t>(img)] = false;
            perm[static_cast<std::size_t>(u)] = -1;
        }
    };
    rec(rec, 0);
    return result;
}

AffineDiagram build_diagram(Kind kind, int twist)
{
    AffineDiagram d;
    d.kind = kind;
    d.twist = twist;
    liealg::RatMatrix form;
    if (twist == 1) {
        const auto& rs = liealg::root_system(kind);
        std::size_t l = static_cast<std::size_t>(rs.rank);
        form.assign(l + 1, std::vector<Rational>(l + 1, Rational(0)));
        form[0][0] = 2;
        for (std::size_t j = 0; j < l; ++j) {
            Rational v = 0;
            for (std::size_t i = 0; i < l; ++i) v -= rs.marks[i] * rs.form[i][j];
            form[0][j + 1] = v;
            form[j + 1][0] = v;
            for (std::size_t i = 0; i < l; ++i) form[i + 1][j + 1] = rs.form[i][j];
        }
        d.len2.push_back(2);
        d.len2.insert(d.len2.end(), rs.len2.begin(), rs.len2.end());
        d.labels.push_back(1);
        d.labels.insert(d.labels.end(), rs.marks.begin(), rs.marks.end());
    } else {
        DiagramSpec spec = twisted_spec(kind, twist);
        std::size_t n = spec.len2.size();
        form.assign(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) form[i][i] = spec.len2[i];
        for (auto [a, b] : spec.edges) {
            Rational v = -std::max(spec.len2[static_cast<std::size_t>(a)], spec.len2[static_cast<std::size_t>(b)]) / 2;
            form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
            form[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
        }
        d.len2 = spec.len2;
        d.labels = spec.labels;
    }
    for (std::size_t i = 0; i < form.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < form.size(); ++j) s += d.labels[j] * form[i][j];
        if (s != 0) throw std::logic_error("affine diagram labels are not a null vector for " + d.name());
    }
    d.cartan = cartan_from_form(form, d.len2);
    d.automorphisms = diagram_automorphisms(d.cartan);
    return d;
}

FixedAlgebra fixed_of_labels(const AffineDiagram& d, const std::vector<int>& s)
{
    std::vector<std::size_t> zero;
    int nonzero = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) {
            zero.push_back(i);
        } else {
            ++nonzero;
        }
    }
    FixedAlgebra f;
    f.abelian = nonzero - 1;
    if (!zero.empty()) {
        IntMatrix sub(zero.size(), std::vector<int>(zero.size()));
        std::vector<Rational> len;
        for (std::size_t a = 0; a < zero.size(); ++a) {
            len.push_back(d.len2[zero[a]]);
            for (std::size_t b = 0; b < zero.size(); ++b) sub[a][b] = d.cartan[zero[a]][zero[b]];
        }
        f.simple = liealg::classify_cartan(sub, len);
    }
    return f;
}

} // namespace

std::string AffineDiagram::name() const { return kind.name() + "^(" + std::to_string(twist) + ")"; }

std::vector<int> admissible_twists(Kind kind)
{
    std::vector<int> t{1};
    int l = kind.rank;
    if ((kind.family == Family::A && l >= 2) || kind.family == Family::D || (kind.family == Family::E && l == 6)) t.push_back(2);
    if (kind.family == Family::D && l == 4) t.push_back(3);
    return t;
}

const AffineDiagram& affine_diagram(Kind kind, int twist)
{
    auto tw = admissible_twists(kind);
    if (std::find(tw.begin(), tw.end(), twist) == tw.end()) {
        throw std::invalid_argument(kind.name() + " has no twisted affine diagram of type " + std::to_string(twist));
    }
    static std::mutex mu;
    static std::map<std::pair<Kind, int>, AffineDiagram> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(kind, twist);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_diagram(kind, twist)).first;
    return it->second;
}

KacClass make_kac_class(Kind kind, int twist, const std::vector<int>& s)
{
    const AffineDiagram& d = affine_diagram(kind, twist);
    if (s.size() != d.labels.size()) {
        throw std::invalid_argument(d.name() + " needs " + std::to_string(d.labels.size()) + " Kac coordinates");
    }
    int g = 0;
    long weighted = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw std::invalid_argument("Kac coordinates must be non-negative");
        g = std::gcd(g, s[i]);
        weighted += static_cast<long>(d.labels[i]) * s[i];
    }
    if (g != 1) throw std::invalid_argument("Kac coordinates must be coprime");
    KacClass k;
    k.kind = kind;
    k.twist = twist;
    k.s = s;
    for (const auto& perm : d.automorphisms) {
        std::vector<int> img(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) img[static_cast<std::size_t>(perm[i])] = s[i];
        if (img > k.s) k.s = img;
    }
    k.order = twist * weighted;
    k.fixed = fixed_of_labels(d, k.s);
    return k;
}

std::vector<KacClass> enumerate_classes(Kind kind, long n)
{
    if (n < 1) throw std::domain_error("enumerate_classes: order must be positive");
    std::vector<KacClass> out;
    for (int twist : admissible_twists(kind)) {
        if (n % twist != 0) continue;
        const AffineDiagram& d = affine_diagram(kind, twist);
        long target = n / twist;
        std::vector<int> s(d.labels.size(), 0);
        std::vector<std::vector<int>> seen;
        auto rec = [&](auto&& self, std::size_t i, long left) -> void {
            if (i == s.size()) {
                if (left != 0) return;
                int g = 0;
                for (int x : s) g = std::gcd(g, x);
                if (g != 1) return;
                KacClass k = make_kac_class(kind, twist, s);
                if (std::find(seen.begin(), seen.end(), k.s) == seen.end()) {
                    seen.push_back(k.s);
                    out.push_back(k);
                }
                return;
            }
            for (long v = 0; v * d.labels[i] <= left; ++v) {
                s[i] = static_cast<int>(v);
                self(self, i + 1, left - v * d.labels[i]);
            }
            s[i] = 0;
        };
        rec(rec, 0, target);
    }
    return out;
}

std::string KacClass::serialize() const
{
    std::ostringstream os;
    os << kind.name() << "^(" << twist << "); s=[";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]; order=" << order << "; fixed=" << fixed.str();
    return os.str();
}

} // namespace orbidim::kacaut
