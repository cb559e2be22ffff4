#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "palinstar/words.hpp"

namespace palinstar {

/// Palindromic tree over one or more strings.
///
/// Node 0 is the imaginary root (length -1), node 1 the empty root (length 0).
/// Every other node is one distinct non-empty palindrome; a transition by
/// letter c from the node of p leads to the node of c p c. Nodes are shared
/// across strings, so after feeding several strings `node_count()` is the size
/// of the union of their palindrome sets.
///
/// Appending a letter creates at most one node: two palindromes ending at the
/// same position are nested, and the shorter has already occurred as a prefix
/// of the longer.
class Eertree {
public:
    using NodeId = std::int32_t;
    static constexpr NodeId kImaginaryRoot = 0;
    static constexpr NodeId kEmptyRoot = 1;

    explicit Eertree(std::size_t alphabet_size);

    // Appends c to the current string. Returns 1 if a new palindrome was
    // discovered (its first appearance ends here), 0 otherwise.
    int add_letter(Letter c);

    // Subsequent letters start a fresh string; discovered palindromes persist.
    void start_new_string() noexcept;

    // start_new_string() followed by every letter of w; returns nodes created.
    std::size_t add_string(const Word& w);

    // Drops every palindrome; keeps allocated storage.
    void clear() noexcept;

    std::size_t node_count() const noexcept { return length_.size() - 2; }
    std::size_t alphabet_size() const noexcept { return sigma_; }

    // Including the two roots.
    std::size_t total_nodes() const noexcept { return length_.size(); }
    NodeId active() const noexcept { return active_; }
    std::int32_t length(NodeId v) const { return length_[static_cast<std::size_t>(v)]; }
    NodeId suffix_link(NodeId v) const { return link_[static_cast<std::size_t>(v)]; }
    // 0 when absent (a root is never a transition target).
    NodeId transition(NodeId v, Letter c) const {
        return next_[static_cast<std::size_t>(v) * sigma_ + c];
    }

    Word palindrome(NodeId v) const;
    // All stored palindromes in node-creation order.
    std::vector<Word> palindromes() const;

    // One line per non-root node: palindrome, length, suffix-link palindrome.
    void dump(std::ostream& out, const Alphabet& alphabet) const;

private:
    NodeId longest_extendable(NodeId v, std::size_t pos, Letter c) const noexcept;

    std::size_t sigma_;
    std::vector<std::int32_t> length_;
    std::vector<NodeId> link_;
    std::vector<NodeId> parent_;
    std::vector<Letter> edge_;
    std::vector<NodeId> next_;
    std::vector<Letter> text_;
    NodeId active_ = kEmptyRoot;
};

}  // namespace palinstar
