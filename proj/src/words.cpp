#include "palinstar/words.hpp"

#include <algorithm>
#include <cctype>

#include "palinstar/eertree.hpp"
#include "palinstar/error.hpp"

namespace palinstar {

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw DomainError("alphabet must contain at least one symbol");
    if (symbols_.size() > 255) throw DomainError("alphabet too large");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto u = static_cast<unsigned char>(symbols_[i]);
        if (!std::isgraph(u))
            throw DomainError("alphabet symbols must be printable ASCII characters");
        if (index_[u] >= 0)
            throw DomainError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        index_[u] = static_cast<std::int16_t>(i);
    }
}

Alphabet Alphabet::first(std::size_t size) {
    if (size == 0 || size > 26) throw DomainError("standard alphabet size must be in [1, 26]");
    std::vector<char> symbols(size);
    for (std::size_t i = 0; i < size; ++i) symbols[i] = static_cast<char>('a' + i);
    return Alphabet(std::move(symbols));
}

char Alphabet::symbol(Letter letter) const {
    if (letter >= symbols_.size())
        throw InvalidLetter("letter index " + std::to_string(letter) + " outside alphabet of size " +
                            std::to_string(symbols_.size()));
    return symbols_[letter];
}

Letter Alphabet::letter(char symbol) const {
    const auto idx = index_[static_cast<unsigned char>(symbol)];
    if (idx < 0) throw InvalidLetter(std::string("symbol '") + symbol + "' is not in the alphabet");
    return static_cast<Letter>(idx);
}

bool Alphabet::contains(char symbol) const noexcept {
    return index_[static_cast<unsigned char>(symbol)] >= 0;
}

std::size_t Word::letter_bound() const noexcept {
    if (letters_.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(letters_.begin(), letters_.end())) + 1;
}

Word Word::appended(Letter c) const {
    auto letters = letters_;
    letters.push_back(c);
    return Word(std::move(letters));
}

Word Word::factor(std::size_t start, std::size_t length) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(start + length)));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char ch : text) letters.push_back(alphabet.letter(ch));
    return Word(std::move(letters));
}

std::string format_word(const Word& word, const Alphabet& alphabet) {
    std::string out;
    out.reserve(word.size());
    for (Letter c : word) out.push_back(alphabet.symbol(c));
    return out;
}

Word reverse(const Word& w) {
    return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

Word reverse_concat(const Word& left, const Word& right) {
    std::vector<Letter> letters(left.letters().rbegin(), left.letters().rend());
    letters.insert(letters.end(), right.begin(), right.end());
    return Word(std::move(letters));
}

bool is_palindrome(const Word& w) {
    const auto s = w.letters();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::set<Word> palindromic_factors(const Word& w) {
    std::set<Word> found;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
            Word f = w.factor(i, len);
            if (is_palindrome(f)) found.insert(std::move(f));
        }
    }
    return found;
}

std::size_t count_distinct_palindromes_word(const Word& w) {
    Eertree tree(std::max<std::size_t>(w.letter_bound(), 1));
    for (Letter c : w) tree.add_letter(c);
    return tree.node_count();
}

}  // namespace palinstar
