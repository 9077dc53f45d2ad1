#include "orbidim/orbifold.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace orbidim::orbifold {

using liealg::Kind;
using liealg::RootVec;

namespace {

void check_dominated(const RootSystem& rs, const CoweightVec& h)
{
    if (static_cast<int>(h.size()) != rs.rank) throw std::invalid_argument("coweight has the wrong rank for " + rs.kind.name());
    for (const RootVec& a : rs.positive_roots) {
        Rational v = rs.root_value(a, h);
        if (v > 1 || v < -1) {
            throw std::domain_error("coweight " + liealg::coweight_to_string(h) + " takes a root value outside [-1, 1] on " +
                                    rs.kind.name() + "; reduce it with alcove_representative first");
        }
    }
}

CoweightVec shifted(const CoweightVec& x, const std::vector<int>& coroot, int sign)
{
    CoweightVec y = x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += sign * coroot[i];
    return y;
}

struct FactorTable {
    std::vector<WeightVec> lambdas;
    std::vector<Rational> rho;   // affine conformal weight
    std::vector<Rational> term;  // rho + lambda(h^-)
    Rational min_term;
};

FactorTable factor_table(const liealg::AffineFactor& f, const CoweightVec& h)
{
    const RootSystem& rs = liealg::root_system(f.kind);
    check_dominated(rs, h);
    CoweightVec hminus = liealg::weyl_antidominant(rs, h).h;
    FactorTable t;
    t.lambdas = liealg::dominant_weights_of_level(rs, f.level);
    for (const WeightVec& l : t.lambdas) {
        Rational r = liealg::affine_conformal_weight(rs, f.level, l);
        Rational m = r + liealg::pairing(rs, l, hminus);
        m.canonicalize();
        if (t.term.empty() || m < t.min_term) t.min_term = m;
        t.rho.push_back(r);
        t.term.push_back(m);
    }
    return t;
}

struct Search {
    const std::vector<FactorTable>& tables;
    std::vector<Rational> tail_min; // tail_min[i] = sum_{j >= i} min_term
    Rational budget;                // floor - <h,h>/2
    Rational norm_half;
    Rational rho_cap;
    ScreenResult out;
    std::vector<size_t> pick;

    void run(size_t i, const Rational& rho, const Rational& term)
    {
        if (term + tail_min[i] >= budget) return;
        if (i == tables.size()) {
            ++out.examined;
            if (!is_integer(rho) || rho < 2) return;
            ScreenEntry e;
            for (size_t j = 0; j < tables.size(); ++j) e.lambdas.push_back(tables[j].lambdas[pick[j]]);
            e.rho = rho;
            e.twisted = term + norm_half;
            e.twisted.canonicalize();
            (rho <= rho_cap ? out.problematic : out.beyond_cap).push_back(std::move(e));
            return;
        }
        const FactorTable& t = tables[i];
        for (size_t k = 0; k < t.lambdas.size(); ++k) {
            pick[i] = k;
            run(i + 1, rho + t.rho[k], term + t.term[k]);
        }
    }
};

} // namespace

CoweightVec alcove_representative(const RootSystem& rs, const CoweightVec& h)
{
    if (static_cast<int>(h.size()) != rs.rank) throw std::invalid_argument("coweight has the wrong rank for " + rs.kind.name());
    std::vector<std::vector<int>> coroots;
    for (const RootVec& a : rs.positive_roots) coroots.push_back(rs.coroot_coords(a));

    // Each step strictly lowers the norm; the fixed point lies in the Voronoi cell of Q^v.
    CoweightVec x = h;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t r = 0; r < coroots.size(); ++r) {
            Rational v = rs.root_value(rs.positive_roots[r], x);
            if (v > 1) {
                x = shifted(x, coroots[r], -1);
                moved = true;
            } else if (v < -1) {
                x = shifted(x, coroots[r], +1);
                moved = true;
            }
        }
    }

    // Other minimal points are reached through a(x) = +-1 moves, which keep the norm.
    std::set<CoweightVec> seen{x};
    std::vector<CoweightVec> todo{x};
    while (!todo.empty()) {
        CoweightVec y = std::move(todo.back());
        todo.pop_back();
        for (size_t r = 0; r < coroots.size(); ++r) {
            Rational v = rs.root_value(rs.positive_roots[r], y);
            if (v == 1 || v == -1) {
                CoweightVec z = shifted(y, coroots[r], v == 1 ? -1 : 1);
                if (seen.insert(z).second) todo.push_back(std::move(z));
            }
        }
    }
    return *seen.begin();
}

Rational structure_norm(const AffineStructure& s, const std::vector<CoweightVec>& hs)
{
    if (hs.size() != s.factors.size()) throw std::invalid_argument("need one coweight per simple factor");
    Rational total = 0;
    for (size_t i = 0; i < hs.size(); ++i) {
        const RootSystem& rs = liealg::root_system(s.factors[i].kind);
        if (static_cast<int>(hs[i].size()) != rs.rank) throw std::invalid_argument("coweight has the wrong rank for " + rs.kind.name());
        total += s.factors[i].level * liealg::coweight_inner(rs, hs[i], hs[i]);
    }
    total.canonicalize();
    return total;
}

Rational twisted_module_weight(const AffineStructure& s, const std::vector<WeightVec>& lambdas,
                               const std::vector<CoweightVec>& hs)
{
    if (lambdas.size() != s.factors.size() || hs.size() != s.factors.size()) {
        throw std::invalid_argument("need one weight and one coweight per simple factor");
    }
    Rational total = structure_norm(s, hs) / 2;
    for (size_t i = 0; i < hs.size(); ++i) {
        const RootSystem& rs = liealg::root_system(s.factors[i].kind);
        check_dominated(rs, hs[i]);
        const WeightVec& l = lambdas[i];
        if (static_cast<int>(l.size()) != rs.rank) throw std::invalid_argument("weight has the wrong rank for " + rs.kind.name());
        if (std::any_of(l.begin(), l.end(), [](long c) { return c < 0; })) throw std::domain_error("weight must be dominant");
        if (liealg::level_of(rs, l) > s.factors[i].level) throw std::domain_error("weight exceeds the level");
        total += liealg::affine_conformal_weight(rs, s.factors[i].level, l);
        total += liealg::pairing(rs, l, liealg::weyl_antidominant(rs, hs[i]).h);
    }
    total.canonicalize();
    return total;
}

ScreenResult screen_problematic_modules(const AffineStructure& s, const std::vector<CoweightVec>& hs,
                                        const Rational& floor, const Rational& rho_cap)
{
    if (hs.size() != s.factors.size()) throw std::invalid_argument("need one coweight per simple factor");
    std::vector<FactorTable> tables;
    for (size_t i = 0; i < hs.size(); ++i) tables.push_back(factor_table(s.factors[i], hs[i]));

    Rational norm_half = structure_norm(s, hs) / 2;
    std::vector<Rational> tail_min(tables.size() + 1, Rational(0));
    for (size_t i = tables.size(); i-- > 0;) tail_min[i] = tail_min[i + 1] + tables[i].min_term;

    if (tables.empty()) return {};

    // Split on the first factor's weight and merge in order.
    const FactorTable& first = tables.front();
    std::vector<std::future<ScreenResult>> jobs;
    for (size_t k = 0; k < first.lambdas.size(); ++k) {
        jobs.push_back(std::async(std::launch::async, [&, k] {
            Search sr{tables, tail_min, floor - norm_half, norm_half, rho_cap, {}, std::vector<size_t>(tables.size())};
            sr.pick[0] = k;
            sr.run(1, first.rho[k], first.term[k]);
            return std::move(sr.out);
        }));
    }
    ScreenResult res;
    for (auto& j : jobs) {
        ScreenResult part = j.get();
        res.examined += part.examined;
        for (auto& e : part.problematic) res.problematic.push_back(std::move(e));
        for (auto& e : part.beyond_cap) res.beyond_cap.push_back(std::move(e));
    }
    return res;
}

} // namespace orbidim::orbifold
