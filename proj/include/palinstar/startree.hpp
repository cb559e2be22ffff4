#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "palinstar/words.hpp"

namespace palinstar {

// A central vertex with k >= 3 non-empty branches. Each branch word is read
// from the central vertex out to its leaf.
class StarlikeTree {
public:
    StarlikeTree(Alphabet alphabet, std::vector<Word> branches);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const Word> branches() const noexcept { return branches_; }
    const Word& branch(std::size_t i) const { return branches_.at(i); }
    std::size_t branch_count() const noexcept { return branches_.size(); }

    // Common branch length n when this is a (k,n)-starlike tree.
    std::optional<std::size_t> uniform_length() const noexcept;

    friend bool operator==(const StarlikeTree&, const StarlikeTree&) = default;

private:
    Alphabet alphabet_;
    std::vector<Word> branches_;
};

// Convenience for tests and tools: branches given as symbol strings.
StarlikeTree make_tree(const std::vector<std::string>& branches, std::size_t alphabet_size = 2);

struct CrossPath {
    std::size_t first;   // index into ordered_branches
    std::size_t second;  // first < second
    Word word;           // R(ordered_branches[first]) ordered_branches[second]
};

// Branches sorted by non-increasing length (ties lexicographic), and the
// k(k-1)/2 leaf-to-leaf paths in (first, second) lexicographic order. Every
// palindrome of the tree is a factor of some listed path, since each branch is
// a suffix of every path ending in it.
struct PathDecomposition {
    std::vector<Word> ordered_branches;
    std::vector<CrossPath> paths;
};

PathDecomposition decompose(const StarlikeTree& t);
std::vector<Word> cross_paths(const StarlikeTree& t);

// Distinct non-empty palindromes over all simple paths of the tree.
std::size_t count_tree_palindromes(const StarlikeTree& t);

// Same set, listed by (length, lexicographic).
std::vector<Word> tree_palindromes(const StarlikeTree& t);

// Independent brute-force route: union of palindromic_factors over paths.
std::set<Word> oracle_tree_palindromes(const StarlikeTree& t);

// |b_1| + sum_{i>=2} (i-1)|b_i| with lengths sorted non-increasing.
std::size_t branch_length_bound(std::span<const std::size_t> lengths);
std::size_t branch_length_bound(const StarlikeTree& t);

// (1 + k(k-1)/2) n, the branch-length bound with every branch of length n.
std::size_t equal_length_bound(std::size_t k, std::size_t n);

// 4n - 1, valid for binary labelings of three branches of length n.
std::size_t binary_three_branch_bound(std::size_t n);

struct LedgerEntry {
    std::size_t first;
    std::size_t second;
    std::size_t new_count;
    std::size_t bound;
};

// Palindromes discovered per cross path, in decomposition order, against the
// per-path allowance: |b_1| + |b_2| for the first path, |b_j| for path (i, j)
// afterwards.
struct PalindromeLedger {
    std::vector<LedgerEntry> entries;
    std::size_t total = 0;

    bool within_bounds() const noexcept;
};

PalindromeLedger palindrome_ledger(const StarlikeTree& t);

// Probe of the final-position step in the binary three-branch bound. Branches
// y and z share their last letter; x is the third. Paths are processed as
// R(x)y, R(y)z, R(x)z.
struct LastPositionReport {
    Word x;
    Word y;
    Word z;
    // Palindromic suffixes of R(x)z that are not suffixes of R(x)y.
    std::vector<Word> not_suffix_of_xy;
    // Palindromic suffixes of R(x)z not seen earlier in the processing order.
    std::vector<Word> genuinely_new;
};

// Requires at most two letters, k = 3 and equal branch lengths; throws
// Inapplicable otherwise.
LastPositionReport last_position_check(const StarlikeTree& t);

}  // namespace palinstar
