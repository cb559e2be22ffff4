#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palinstar {

// Letters are alphabet indices; printable symbols only appear at I/O boundaries.
using Letter = std::uint8_t;

class Alphabet {
public:
    // Symbols must be printable ASCII, non-empty and pairwise distinct.
    explicit Alphabet(std::vector<char> symbols);

    // The first `size` lowercase letters: 'a', 'b', ...
    static Alphabet first(std::size_t size);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(Letter letter) const;
    Letter letter(char symbol) const;
    bool contains(char symbol) const noexcept;
    std::span<const char> symbols() const noexcept { return symbols_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<char> symbols_;
    std::array<std::int16_t, 256> index_{};
};

// A finite sequence of letter indices. Ordering is lexicographic with a proper
// prefix sorting first.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }
    std::span<const Letter> letters() const noexcept { return letters_; }

    // Largest letter index plus one; 0 for the empty word.
    std::size_t letter_bound() const noexcept;

    Word appended(Letter c) const;
    Word factor(std::size_t start, std::size_t length) const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& word, const Alphabet& alphabet);

Word reverse(const Word& w);

// R(left) followed by right: the word read from the leaf of `left`, through
// the central vertex, out to the leaf of `right`.
Word reverse_concat(const Word& left, const Word& right);

// True iff w equals its reverse. The empty word is a palindrome but is never
// counted anywhere.
bool is_palindrome(const Word& w);

// Brute-force oracle: every factor is enumerated and filtered.
std::set<Word> palindromic_factors(const Word& w);

// Distinct non-empty palindromic factors, via an eertree. Never exceeds |w|.
std::size_t count_distinct_palindromes_word(const Word& w);

// Orders palindrome listings by length, then lexicographically.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace palinstar
