#include "palinstar/eertree.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "palinstar/error.hpp"

namespace palinstar {

Eertree::Eertree(std::size_t alphabet_size) : sigma_(alphabet_size) {
    if (sigma_ == 0 || sigma_ > 256) throw DomainError("eertree alphabet size must be in [1, 256]");
    clear();
}

void Eertree::clear() noexcept {
    length_.assign({-1, 0});
    link_.assign({kImaginaryRoot, kImaginaryRoot});
    parent_.assign({kImaginaryRoot, kImaginaryRoot});
    edge_.assign({0, 0});
    next_.assign(2 * sigma_, 0);
    text_.clear();
    active_ = kEmptyRoot;
}

void Eertree::start_new_string() noexcept {
    text_.clear();
    active_ = kEmptyRoot;
}

// Walks suffix links from v to the longest palindromic suffix that text_[pos]
// can wrap on both sides. Terminates at the imaginary root at the latest.
Eertree::NodeId Eertree::longest_extendable(NodeId v, std::size_t pos, Letter c) const noexcept {
    for (;;) {
        const auto len = static_cast<std::ptrdiff_t>(length_[static_cast<std::size_t>(v)]);
        const auto before = static_cast<std::ptrdiff_t>(pos) - 1 - len;
        if (before >= 0 && text_[static_cast<std::size_t>(before)] == c) return v;
        if (len == -1) return v;
        v = link_[static_cast<std::size_t>(v)];
    }
}

int Eertree::add_letter(Letter c) {
    if (c >= sigma_)
        throw InvalidLetter("letter index " + std::to_string(c) + " outside alphabet of size " +
                            std::to_string(sigma_));
    const std::size_t pos = text_.size();
    text_.push_back(c);

    const NodeId v = longest_extendable(active_, pos, c);
    const std::size_t slot = static_cast<std::size_t>(v) * sigma_ + c;
    if (next_[slot] != 0) {
        active_ = next_[slot];
        return 0;
    }

    const auto created = static_cast<NodeId>(length_.size());
    const std::int32_t len = length_[static_cast<std::size_t>(v)] + 2;
    NodeId link = kEmptyRoot;
    if (len > 1) {
        const NodeId w = longest_extendable(link_[static_cast<std::size_t>(v)], pos, c);
        link = next_[static_cast<std::size_t>(w) * sigma_ + c];
    }
    length_.push_back(len);
    link_.push_back(link);
    parent_.push_back(v);
    edge_.push_back(c);
    next_.resize(next_.size() + sigma_, 0);
    next_[slot] = created;
    active_ = created;
    return 1;
}

std::size_t Eertree::add_string(const Word& w) {
    start_new_string();
    std::size_t created = 0;
    for (Letter c : w) created += static_cast<std::size_t>(add_letter(c));
    return created;
}

Word Eertree::palindrome(NodeId v) const {
    // Walk to the root collecting the outer letters, then mirror.
    std::vector<Letter> half;
    while (v != kImaginaryRoot && v != kEmptyRoot) {
        half.push_back(edge_[static_cast<std::size_t>(v)]);
        v = parent_[static_cast<std::size_t>(v)];
    }
    const bool odd = v == kImaginaryRoot;
    std::vector<Letter> letters(half.begin(), half.end());
    letters.insert(letters.end(), half.rbegin() + (odd ? 1 : 0), half.rend());
    return Word(std::move(letters));
}

std::vector<Word> Eertree::palindromes() const {
    std::vector<Word> out;
    out.reserve(node_count());
    for (std::size_t v = 2; v < length_.size(); ++v) out.push_back(palindrome(static_cast<NodeId>(v)));
    return out;
}

void Eertree::dump(std::ostream& out, const Alphabet& alphabet) const {
    auto name = [&](NodeId v) -> std::string {
        if (v == kImaginaryRoot) return "<imaginary>";
        if (v == kEmptyRoot) return "<empty>";
        return format_word(palindrome(v), alphabet);
    };
    for (std::size_t v = 2; v < length_.size(); ++v) {
        const auto id = static_cast<NodeId>(v);
        out << name(id) << ' ' << length_[v] << ' ' << name(link_[v]) << '\n';
    }
}

}  // namespace palinstar
