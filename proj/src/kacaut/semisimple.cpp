#include "orbidim/kacaut.hpp"

#include "orbidim/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orbidim::kacaut {

std::string SemisimpleAut::str(const std::vector<Kind>& factors) const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& part : parts) {
        if (!first) os << " | ";
        first = false;
        if (const auto* ip = std::get_if<InnerPart>(&part)) {
            os << factors.at(ip->factor).name() << "[" << ip->factor << "] h=" << liealg::coweight_to_string(ip->h);
        } else {
            const auto& cp = std::get<CyclePart>(part);
            os << "cycle(";
            for (std::size_t i = 0; i < cp.factors.size(); ++i) os << (i ? "," : "") << cp.factors[i];
            os << ") residual " << cp.residual.serialize();
        }
    }
    return os.str();
}

SemisimpleFixed fixed_subalgebra_semisimple(const std::vector<Kind>& factors, const SemisimpleAut& aut)
{
    std::vector<int> covered(factors.size(), 0);
    SemisimpleFixed res;
    for (const auto& part : aut.parts) {
        if (const auto* ip = std::get_if<InnerPart>(&part)) {
            if (ip->factor >= factors.size()) throw std::invalid_argument("automorphism refers to a missing factor");
            ++covered[ip->factor];
            InnerAut inner = inner_from_coweight(liealg::root_system(factors[ip->factor]), ip->h);
            res.fixed += inner.fixed;
            res.order = lcm(res.order, inner.order);
        } else {
            const auto& cp = std::get<CyclePart>(part);
            if (cp.factors.empty()) throw std::invalid_argument("empty cycle");
            for (std::size_t f : cp.factors) {
                if (f >= factors.size()) throw std::invalid_argument("automorphism refers to a missing factor");
                if (factors[f] != cp.residual.kind) throw std::invalid_argument("cycle permutes non-isomorphic factors");
                ++covered[f];
            }
            res.fixed += cp.residual.fixed;
            res.order = lcm(res.order, static_cast<long>(cp.factors.size()) * cp.residual.order);
        }
    }
    for (int c : covered) {
        if (c != 1) throw std::invalid_argument("automorphism must act on every factor exactly once");
    }
    return res;
}

namespace {

struct Candidate {
    FixedAlgebra fixed;
    KacClass residual;
};

// Distinct fixed algebras of automorphisms of `kind` with order dividing m.
const std::vector<Candidate>& candidates(Kind kind, long m)
{
    static std::mutex mu;
    static std::map<std::pair<Kind, long>, std::vector<Candidate>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(kind, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Candidate> out;
    for (long d : divisors(m)) {
        for (const auto& k : enumerate_classes(kind, d)) {
            bool dup = std::any_of(out.begin(), out.end(), [&](const Candidate& c) { return c.fixed == k.fixed; });
            if (!dup) out.push_back(Candidate{k.fixed, k});
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

struct Need {
    std::map<Kind, int> simple;
    int abelian = 0;

    bool take(const FixedAlgebra& f)
    {
        if (f.abelian > abelian) return false;
        std::map<Kind, int> want;
        for (const auto& k : f.simple) ++want[k];
        for (const auto& [k, c] : want) {
            auto it = simple.find(k);
            if (it == simple.end() || it->second < c) return false;
        }
        for (const auto& [k, c] : want) simple[k] -= c;
        abelian -= f.abelian;
        return true;
    }

    void give(const FixedAlgebra& f)
    {
        for (const auto& k : f.simple) ++simple[k];
        abelian += f.abelian;
    }

    bool empty() const
    {
        if (abelian != 0) return false;
        return std::all_of(simple.begin(), simple.end(), [](const auto& kv) { return kv.second == 0; });
    }
};

} // namespace

std::optional<SemisimpleAut> admits_fixed_subalgebra(const std::vector<Kind>& factors, const FixedAlgebra& target, long n)
{
    if (n < 1) throw std::domain_error("admits_fixed_subalgebra: order bound must be positive");
    std::map<Kind, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < factors.size(); ++i) groups[factors[i]].push_back(i);
    std::vector<std::pair<Kind, std::vector<std::size_t>>> gs(groups.begin(), groups.end());

    Need need;
    for (const auto& k : target.simple) ++need.simple[k.canonical()];
    need.abelian = target.abelian;

    // Chosen (cycle length, candidate) per group; candidates pre-filtered against the target.
    struct Choice {
        long len;
        const Candidate* cand;
    };
    std::vector<std::vector<Choice>> chosen(gs.size());
    auto divs = divisors(n);

    auto rec = [&](auto&& self, std::size_t g, long remaining, long last_len, std::size_t last_idx) -> bool {
        if (g == gs.size()) return need.empty();
        if (remaining == 0) return self(self, g + 1, g + 1 < gs.size() ? static_cast<long>(gs[g + 1].second.size()) : 0, n + 1, 0);
        Kind kind = gs[g].first;
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            long p = *it;
            if (p > remaining || p > last_len) continue;
            const auto& cands = candidates(kind, n / p);
            std::size_t start = (p == last_len) ? last_idx : 0;
            for (std::size_t ci = start; ci < cands.size(); ++ci) {
                if (!need.take(cands[ci].fixed)) continue;
                chosen[g].push_back(Choice{p, &cands[ci]});
                if (self(self, g, remaining - p, p, ci)) return true;
                chosen[g].pop_back();
                need.give(cands[ci].fixed);
            }
        }
        return false;
    };
    if (gs.empty()) return need.empty() ? std::optional<SemisimpleAut>(SemisimpleAut{}) : std::nullopt;
    if (!rec(rec, 0, static_cast<long>(gs[0].second.size()), n + 1, 0)) return std::nullopt;

    SemisimpleAut aut;
    for (std::size_t g = 0; g < gs.size(); ++g) {
        std::size_t next = 0;
        for (const auto& ch : chosen[g]) {
            CyclePart cp;
            for (long j = 0; j < ch.len; ++j) cp.factors.push_back(gs[g].second[next++]);
            cp.residual = ch.cand->residual;
            aut.parts.emplace_back(std::move(cp));
        }
    }
    return aut;
}

} // namespace orbidim::kacaut
