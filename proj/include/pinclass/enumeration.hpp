#pragma once

#include "pinclass/gridded.hpp"
#include "pinclass/pinwords.hpp"
#include "pinclass/words.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pinclass {

using Counts = std::vector<std::uint64_t>; // entry k-1 holds length k

enum class Provenance { BruteForce, FactorFormula };
std::string to_string(Provenance p);

inline constexpr std::size_t kDefaultPrefixBudget = 40;
inline constexpr std::size_t kMaxPatternLength = 16;

struct EnumerationOptions {
    std::size_t prefix_budget = kDefaultPrefixBudget;
    /// Count on exactly this many pins instead of running the stabilisation
    /// check. Required for aperiodic words.
    std::optional<std::size_t> prefix_length;
};

struct Enumeration {
    std::vector<GriddedPermutation> patterns; // every pattern of length 1..n_max
    Counts counts;
    std::size_t prefix_length = 0;
    bool certified = false; // counts equal at prefix_length - period
};

/// Distinct gridded patterns of length 1..n_max in pi_w for a finite word,
/// grown one pin at a time.
std::vector<GriddedPermutation> prefix_patterns(const PinWord& w, std::size_t n_max);

/// Same set by brute force over point subsets of the constructed permutation.
std::set<GriddedPermutation> subset_patterns(const PinWord& w, std::size_t n_max);

Enumeration enumerate_class(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts = {});

Counts class_counts(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts = {});

Counts indecomposable_counts_brute_force(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts = {});
/// Requires w = phi(b): counts from the factor complexity of b.
Counts indecomposable_counts_formula(const WordSpec& w, std::size_t n_max);
/// Requires w = phi(b): counts from the recurrent complexity of b.
Counts interior_indecomposable_counts(const WordSpec& w, std::size_t n_max);

struct ClassProfile {
    std::string word;
    Counts counts;
    Counts indec_counts;
    Counts interior_indec_counts; // empty when w is not a phi image
    Provenance counts_provenance = Provenance::BruteForce;
    Provenance indec_provenance = Provenance::BruteForce;
    Provenance interior_provenance = Provenance::FactorFormula;
    std::size_t prefix_length = 0;
};

/// Brute-force counts plus factor-formula counts where they apply. Throws
/// std::logic_error if the two indecomposable counts disagree.
ClassProfile class_profile(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts = {});

void write_json_lines(std::ostream& os, const Counts& counts, Provenance p);

} // namespace pinclass
