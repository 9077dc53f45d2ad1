#pragma once

// The fifteen inner-automorphism orbifold cases, the list of weight-one Lie
// algebras of holomorphic c = 24 VOAs, and the verification pipeline.

#include "orbidim/kacaut.hpp"
#include "orbidim/liealg.hpp"
#include "orbidim/orbifold.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbidim::cases {

using kacaut::FixedAlgebra;
using liealg::AffineStructure;
using liealg::CoweightVec;
using orbifold::CycleShape;

/// Quoted data that needs lattice automorphism groups; never recomputed here.
struct PaperAsserted {
    static constexpr const char* provenance = "paper-asserted";
    std::string conj_class_length;
    std::string fixed_lattice_genus;
    std::string root_fixed_lattice_genus;
    std::string coset_group;
    std::string class_selection;
    std::vector<Rational> shifted_rho;
};

struct ShapeVariant {
    std::string label;
    CycleShape shape;
    PaperAsserted asserted;
};

struct OrbifoldCase {
    std::string id;
    std::string lattice;                 // Niemeier root system, e.g. "A9^2D6"
    long n = 1;
    AffineStructure source;              // V1 carrying the inner automorphism
    std::string source_text;
    int schellekens_index = -1;
    std::vector<CoweightVec> h;          // per factor
    std::vector<long> factor_orders;
    Rational h_norm_sq;
    FixedAlgebra fixed;
    long expected_d = 0;
    bool rho_required = false;
    std::map<long, long> expected_screen; // i -> number of problematic tuples; absent means none
    std::vector<ShapeVariant> variants;
};

struct SchellekensEntry {
    int index = 0;
    std::string text;
    AffineStructure structure; // empty for the pseudo-entries 0 and 1
    int abelian_rank = 0;
    long dim = 0;
};

/// Both throw std::runtime_error naming the offending field path or entry.
std::vector<OrbifoldCase> parse_cases(const std::string& json_text);
std::vector<SchellekensEntry> parse_schellekens(const std::string& json_text);

/// Read the file; when check_sum is set the file must match its line in SHA256SUMS beside it.
std::vector<OrbifoldCase> load_cases(const std::filesystem::path& path, bool check_sum = true);
std::vector<SchellekensEntry> load_schellekens(const std::filesystem::path& path, bool check_sum = true);

/// $ORBIDIM_DATA_DIR, else the source tree's data directory.
std::filesystem::path default_data_dir();

std::string sha256_hex(const std::string& bytes);
/// Files listed in dir/SHA256SUMS whose digest differs (or which are missing).
std::vector<std::string> checksum_mismatches(const std::filesystem::path& dir);

struct StepResult {
    std::string step;  // "a" .. "g"
    std::string title;
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VariantStats {
    std::string label;
    std::string shape;
    orbifold::CycleStats stats;
};

struct ScreenLevel {
    long i = 1;
    std::vector<CoweightVec> h;
    orbifold::ScreenResult result;
};

struct CaseReport {
    std::string id;
    std::string lattice;
    long n = 1;
    std::string source;
    std::vector<VariantStats> variants;
    FixedAlgebra fixed;
    Rational h_norm_sq;
    std::map<long, Rational> dims; // dim V1^{sigma^d}
    Rational d;
    std::vector<std::string> survivors;
    std::vector<ScreenLevel> screening;
    std::vector<StepResult> steps;
    const OrbifoldCase* source_case = nullptr;

    bool passed() const;
};

CaseReport verify_case(const OrbifoldCase& c, const std::vector<SchellekensEntry>& table);

struct Summary {
    std::vector<CaseReport> reports;
    int passed = 0;
};
/// Runs the cases in parallel; reports keep the input order.
Summary verify_all(const std::vector<OrbifoldCase>& cs, const std::vector<SchellekensEntry>& table);

/// Entries of the given dimension admitting `fixed` as the fixed algebra of an automorphism of order dividing n.
std::vector<const SchellekensEntry*> schellekens_scan(const std::vector<SchellekensEntry>& table, long dim,
                                                      const FixedAlgebra& fixed, long n);

std::string screen_entry_string(const orbifold::ScreenEntry& e); // "([..],[..])"
std::string report_json(const CaseReport& r, int indent = 2);
std::string report_text(const CaseReport& r);
/// Aligned table: No. | V1 | n | V1^sigma | d | V1^orb | result.
std::string summary_table(const Summary& s);

} // namespace orbidim::cases
