#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "palinstar/startree.hpp"

namespace palinstar {

inline constexpr std::uint64_t kDefaultLabelingCap = std::uint64_t{1} << 26;
inline constexpr std::size_t kDefaultWitnessLimit = 1000;
// Canonicalization minimizes over every relabeling of the alphabet.
inline constexpr std::size_t kMaxSearchAlphabet = 6;

struct SearchSpec {
    std::size_t k = 3;
    std::size_t n = 1;
    std::size_t sigma = 2;
    bool collect_witnesses = false;
    std::size_t witness_limit = kDefaultWitnessLimit;
    std::size_t worker_count = 1;
    std::uint64_t labeling_cap = kDefaultLabelingCap;
    bool ignore_cap = false;
};

// sigma^(k n), saturating at UINT64_MAX.
std::uint64_t labeling_count(std::size_t k, std::size_t n, std::size_t sigma) noexcept;

// Throws DomainError for malformed specs, CapExceeded when the labeling space
// is larger than the cap and the cap is not overridden.
void check_search_spec(const SearchSpec& spec);

struct SearchResult {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t max_count = 0;
    // Canonical trees attaining max_count, lexicographic, at most witness_limit.
    std::vector<StarlikeTree> witnesses;
    // Exact number of canonical classes attaining max_count.
    std::uint64_t witness_total = 0;
    std::uint64_t classes_examined = 0;
    std::uint64_t labelings_total = 0;
    std::chrono::milliseconds elapsed{0};
};

// Representative of the class of t under branch permutations and alphabet
// relabelings: the relabeling whose sorted branch tuple is least.
StarlikeTree canonical_form(const StarlikeTree& t);

struct CanonicalClass {
    StarlikeTree representative;
    // Number of ordered labelings (branch tuples) in the class.
    std::uint64_t orbit_size;
};

// One call per class, in lexicographic order of representatives.
void enumerate_canonical(const SearchSpec& spec, const std::function<void(const CanonicalClass&)>& visit);
std::vector<CanonicalClass> enumerate_canonical(const SearchSpec& spec);

// Empirical P(k, n) over sigma letters. Output is independent of worker_count.
SearchResult max_palindromes(const SearchSpec& spec);

struct BoundViolation {
    StarlikeTree tree;
    std::string kind;
    std::string detail;
};

struct BoundsReport {
    std::size_t max_count = 0;
    std::uint64_t classes_checked = 0;
    std::vector<BoundViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

// Checks every canonical class against the branch-length bound, the per-path
// ledger allowances and, for binary three-branch trees, 4n - 1.
BoundsReport verify_bounds(const SearchSpec& spec);

// Branches a^n, b a^(n-1), b b a^(n-2); n >= 2.
StarlikeTree extremal_tree(std::size_t n);

struct ConjectureRow {
    std::size_t n;
    std::size_t empirical;
    std::size_t predicted;  // 4n - 2
    bool match;
};

// Rows for n = 2..n_max with k = 3; sigma, workers and cap come from `base`.
std::vector<ConjectureRow> conjecture_check(std::size_t n_max, const SearchSpec& base);

// Palindromes gained by appending c at the leaf of branch `branch_index`.
std::size_t growth_delta(const StarlikeTree& t, std::size_t branch_index, Letter c);

}  // namespace palinstar
