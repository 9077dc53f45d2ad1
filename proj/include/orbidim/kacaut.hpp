#pragma once

// Finite-order automorphisms of simple Lie algebras via Kac coordinates, inner
// automorphisms exp(2 pi i ad h), and composites on semisimple algebras.

#include "orbidim/liealg.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbidim::kacaut {

using liealg::CoweightVec;
using liealg::IntMatrix;
using liealg::Kind;
using liealg::RootSystem;

/// Reductive Lie algebra: simple summands (canonical kinds, sorted) plus an abelian part.
struct FixedAlgebra {
    std::vector<Kind> simple;
    int abelian = 0;

    long dim() const;
    int rank() const;
    /// e.g. "A1A4A7B3C", "A3C^7", "0" for the zero algebra.
    std::string str() const;
    static FixedAlgebra parse(std::string_view text);

    FixedAlgebra& operator+=(const FixedAlgebra& other);
    bool operator==(const FixedAlgebra& other) const = default;
};

struct AffineDiagram {
    Kind kind;
    int twist = 1;
    IntMatrix cartan;               // node 0 first
    std::vector<Rational> len2;
    std::vector<int> labels;        // Kac labels a_i
    std::vector<std::vector<int>> automorphisms;

    /// "E6^(2)" style.
    std::string name() const;
};

/// Twists (1, 2 or 3) for which X^(k) exists.
std::vector<int> admissible_twists(Kind kind);
/// Cached; throws std::invalid_argument for inadmissible twists.
const AffineDiagram& affine_diagram(Kind kind, int twist);

struct KacClass {
    Kind kind;
    int twist = 1;
    std::vector<int> s;
    long order = 1;
    FixedAlgebra fixed;

    /// "X_l^(k); s=[...]; order=n; fixed=..."
    std::string serialize() const;
    bool operator==(const KacClass& other) const { return kind == other.kind && twist == other.twist && s == other.s; }
};

/// Validates, reduces to the lexicographically greatest label vector in its diagram-automorphism orbit,
/// and fills in the order and fixed algebra.
KacClass make_kac_class(Kind kind, int twist, const std::vector<int>& s);

/// All conjugacy classes (up to diagram automorphisms) of automorphisms of order exactly n.
std::vector<KacClass> enumerate_classes(Kind kind, long n);

struct InnerAut {
    long order = 1;                            // order of exp(2 pi i ad h) on the algebra
    FixedAlgebra fixed;
    std::vector<liealg::RootVec> fixed_roots;  // positive roots with a(h) integral
};
InnerAut inner_from_coweight(const RootSystem& rs, const CoweightVec& h);

/// Least k >= 1 with k h in the coroot lattice.
long module_order_bound(const RootSystem& rs, const CoweightVec& h);

/// Kac coordinates of exp(2 pi i ad h), found by moving h into the fundamental alcove.
KacClass kac_class_of_coweight(const RootSystem& rs, const CoweightVec& h);

struct InnerPart {
    std::size_t factor = 0;
    CoweightVec h;
};
/// A cycle of isomorphic factors; residual is the automorphism of one factor given by the cycle's power.
struct CyclePart {
    std::vector<std::size_t> factors;
    KacClass residual;
};
using AutPart = std::variant<InnerPart, CyclePart>;

struct SemisimpleAut {
    std::vector<AutPart> parts;
    std::string str(const std::vector<Kind>& factors) const;
};

struct SemisimpleFixed {
    FixedAlgebra fixed;
    long order = 1;
};
SemisimpleFixed fixed_subalgebra_semisimple(const std::vector<Kind>& factors, const SemisimpleAut& aut);

/// Witness automorphism of order dividing n with the given fixed algebra, built from cycles of
/// isomorphic factors, or nullopt if none exists.
std::optional<SemisimpleAut> admits_fixed_subalgebra(const std::vector<Kind>& factors, const FixedAlgebra& target, long n);

} // namespace orbidim::kacaut
