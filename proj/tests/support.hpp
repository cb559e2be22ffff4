#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "palinstar/startree.hpp"
#include "palinstar/words.hpp"

namespace palinstar::testing {

inline Word w(const std::string& text, std::size_t sigma = 3) {
    return parse_word(text, Alphabet::first(sigma));
}

// Every word of the given length over sigma letters, lexicographic.
inline std::vector<Word> all_words(std::size_t length, std::size_t sigma) {
    std::vector<Word> out;
    std::vector<Letter> letters(length, 0);
    for (;;) {
        out.emplace_back(letters);
        std::size_t pos = length;
        while (pos > 0 && letters[pos - 1] + 1u == sigma) letters[--pos] = 0;
        if (pos == 0) return out;
        ++letters[pos - 1];
    }
}

inline std::vector<Word> all_words_up_to(std::size_t max_length, std::size_t sigma) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        auto words = all_words(len, sigma);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

// Every ordered labeling of k branches of length n.
inline std::vector<StarlikeTree> all_trees(std::size_t k, std::size_t n, std::size_t sigma) {
    const auto words = all_words(n, sigma);
    std::vector<StarlikeTree> out;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        std::vector<Word> branches;
        for (auto i : idx) branches.push_back(words[i]);
        out.emplace_back(Alphabet::first(sigma), std::move(branches));
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] + 1 == words.size()) idx[--pos] = 0;
        if (pos == 0) return out;
        ++idx[pos - 1];
    }
}

inline Word random_word(std::mt19937_64& rng, std::size_t length, std::size_t sigma) {
    std::uniform_int_distribution<int> letter(0, static_cast<int>(sigma) - 1);
    std::vector<Letter> letters(length);
    for (auto& c : letters) c = static_cast<Letter>(letter(rng));
    return Word(std::move(letters));
}

inline StarlikeTree random_tree(std::mt19937_64& rng, std::size_t max_k, std::size_t max_len, std::size_t max_sigma) {
    std::uniform_int_distribution<std::size_t> kd(3, max_k), ld(1, max_len), sd(1, max_sigma);
    const std::size_t k = kd(rng);
    const std::size_t sigma = sd(rng);
    std::vector<Word> branches;
    for (std::size_t i = 0; i < k; ++i) branches.push_back(random_word(rng, ld(rng), sigma));
    return StarlikeTree(Alphabet::first(sigma), std::move(branches));
}

}  // namespace palinstar::testing
