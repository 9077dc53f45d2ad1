#pragma once

// Finite root systems (Humphreys labelling), weights, coweights and affine data.
//
// Conventions:
//   cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j), so row i is a_i in the fundamental-weight basis.
//   Long roots have squared length 2.
//   A weight is a vector of Dynkin labels; a coweight h is stored by its values a_i(h).

#include "orbidim/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace orbidim::liealg {

constexpr int kMaxRank = 24;

enum class Family { A, B, C, D, E, F, G };

struct Kind {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;
    /// "A4", "E8", ...; throws std::invalid_argument for unknown or out-of-range kinds.
    static Kind parse(std::string_view text);
    /// Same algebra under the low-rank isomorphisms (B2 = C2, D3 = A3).
    Kind canonical() const;

    auto operator<=>(const Kind&) const = default;
};

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;
using RootVec = std::vector<int>;       // simple-root coordinates
using WeightVec = std::vector<long>;    // Dynkin labels
using CoweightVec = std::vector<Rational>;

struct RootSystem {
    Kind kind;
    int rank = 0;
    IntMatrix cartan;
    std::vector<Rational> len2;          // (a_i, a_i)
    RatMatrix form;                      // (a_i, a_j)
    std::vector<RootVec> positive_roots; // ascending height, simple roots first
    RootVec highest_root;
    std::vector<int> marks;              // theta = sum marks_i a_i
    std::vector<int> comarks;            // theta^v = sum comarks_i a_i^v
    int coxeter = 0;
    int dual_coxeter = 0;
    long dim = 0;
    RatMatrix gram_weights;              // (L_i, L_j)
    RatMatrix gram_coweights;            // (L_i^v, L_j^v)

    /// a(h) for a root given in simple-root coordinates.
    Rational root_value(const RootVec& alpha, const CoweightVec& h) const;
    /// Coweight coordinates of the coroot of alpha (integers).
    std::vector<int> coroot_coords(const RootVec& alpha) const;
    /// Fundamental-weight coordinates of alpha.
    WeightVec root_weight(const RootVec& alpha) const;
    Rational root_len2(const RootVec& alpha) const;
};

/// Builds the data from scratch; prefer root_system() for cached access.
RootSystem build_root_system(Kind kind);
/// Thread-safe memoised accessor.
const RootSystem& root_system(Kind kind);

/// Positive roots of the finite root system with this Cartan matrix.
std::vector<RootVec> positive_roots_of(const IntMatrix& cartan);

/// Simple components of a finite-type Cartan matrix given the squared root lengths.
std::vector<Kind> classify_cartan(const IntMatrix& cartan, const std::vector<Rational>& len2);

RatMatrix inverse(const RatMatrix& m);

/// lambda(h).
Rational pairing(const RootSystem& rs, const WeightVec& lambda, const CoweightVec& h);
Rational weight_inner(const RootSystem& rs, const WeightVec& a, const WeightVec& b);
Rational coweight_inner(const RootSystem& rs, const CoweightVec& a, const CoweightVec& b);

struct AntidominantResult {
    CoweightVec h;
    std::vector<int> word; // simple reflections applied, in order
};
/// W-conjugate of h with a_i(h) <= 0 for all i.
AntidominantResult weyl_antidominant(const RootSystem& rs, const CoweightVec& h);
CoweightVec reflect_coweight(const RootSystem& rs, const CoweightVec& h, int i);
WeightVec reflect_weight(const RootSystem& rs, const WeightVec& w, int i);

struct WeightMultiplicity {
    WeightVec weight;
    long long mult;
};
/// All weights of L(lambda) with multiplicities (Freudenthal), highest first by depth.
std::vector<WeightMultiplicity> weight_system(const RootSystem& rs, const WeightVec& lambda);
Integer weyl_dimension(const RootSystem& rs, const WeightVec& lambda);

/// lambda(theta^v).
long level_of(const RootSystem& rs, const WeightVec& lambda);
/// Dominant weights with lambda(theta^v) <= k, lexicographic order.
std::vector<WeightVec> dominant_weights_of_level(const RootSystem& rs, long k);
/// (lambda, lambda + 2 delta) / (2 (k + h^v)).
Rational affine_conformal_weight(const RootSystem& rs, long k, const WeightVec& lambda);

struct AffineFactor {
    Kind kind;
    long level = 1;
    auto operator<=>(const AffineFactor&) const = default;
};

struct AffineStructure {
    std::vector<AffineFactor> factors;

    long dim() const;
    int rank() const;
    std::string str() const;
    bool operator==(const AffineStructure&) const = default;
};

struct AlgebraToken {
    bool abelian = false; // a one-dimensional abelian summand, written "C"
    Kind kind;
    long level = 1;
    long mult = 1;
};
/// Splits text such as "A4,5^2 B8E8,2" or "A3C^7" into tokens.
std::vector<AlgebraToken> tokenize_algebra(std::string_view text);

/// Parses e.g. "A4,5^2", "B8E8,2", "A1,2 A3,4^3"; the level defaults to 1.
AffineStructure parse_structure(std::string_view text);

struct ConstraintCheck {
    bool holds = false;
    Rational expected;             // (dim - 24) / 24
    std::vector<Rational> ratios;  // h^v / k per factor
};
/// h^v_i / k_i = (dim V1 - 24) / 24 for every factor, with dim V1 the structure's dimension.
ConstraintCheck schellekens_constraint(const AffineStructure& s);

std::string weight_to_string(const WeightVec& w);
std::string coweight_to_string(const CoweightVec& h);
WeightVec parse_weight(std::string_view text);
/// Accepts "[1/2,0,1/4]" or "1/2,0,1/4".
CoweightVec parse_coweight(std::string_view text);

} // namespace orbidim::liealg
