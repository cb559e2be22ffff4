#include <random>

#include "doctest.h"
#include "palinstar/error.hpp"
#include "palinstar/words.hpp"
#include "support.hpp"

using namespace palinstar;
using palinstar::testing::w;

TEST_CASE("alphabet validates symbols") {
    CHECK(Alphabet::first(3).size() == 3);
    CHECK(Alphabet::first(2).symbol(1) == 'b');
    CHECK(Alphabet::first(2).letter('b') == 1);
    CHECK_THROWS_AS(Alphabet({'a', 'a'}), DomainError);
    CHECK_THROWS_AS(Alphabet(std::vector<char>{}), DomainError);
    CHECK_THROWS_AS(Alphabet({'a', ' '}), DomainError);
    CHECK_THROWS_AS(Alphabet::first(2).letter('c'), InvalidLetter);
    CHECK_THROWS_AS(Alphabet::first(2).symbol(2), InvalidLetter);
}

TEST_CASE("words serialize through the symbol table") {
    const Alphabet ab({'x', 'y'});
    CHECK(format_word(parse_word("yxxy", ab), ab) == "yxxy");
    CHECK(parse_word("yx", ab) == Word{1, 0});
    CHECK_THROWS_AS(parse_word("xz", ab), InvalidLetter);
}

TEST_CASE("reverse") {
    CHECK(reverse(w("ab")) == w("ba"));
    CHECK(reverse(w("")) == w(""));
    CHECK(reverse(w("baaa")) == w("aaab"));
    CHECK(reverse_concat(w("ba"), w("bb")) == w("abbb"));
}

TEST_CASE("is_palindrome") {
    CHECK(is_palindrome(w("aba")));
    CHECK_FALSE(is_palindrome(w("ab")));
    CHECK(is_palindrome(w("bb")));
    CHECK(is_palindrome(w("")));
}

TEST_CASE("palindromic_factors oracle") {
    CHECK(palindromic_factors(w("aba")) == std::set<Word>{w("a"), w("b"), w("aba")});
    CHECK(palindromic_factors(w("aaaa")) == std::set<Word>{w("a"), w("aa"), w("aaa"), w("aaaa")});
    CHECK(palindromic_factors(w("ab")) == std::set<Word>{w("a"), w("b")});
    CHECK(palindromic_factors(w("aaba")) == std::set<Word>{w("a"), w("aa"), w("b"), w("aba")});
    CHECK(palindromic_factors(w("")).empty());
}

TEST_CASE("count_distinct_palindromes_word") {
    CHECK(count_distinct_palindromes_word(w("aaaa")) == 4);
    CHECK(count_distinct_palindromes_word(w("aaba")) == 4);
    CHECK(count_distinct_palindromes_word(w("")) == 0);
    for (std::size_t n = 0; n <= 64; ++n)
        CHECK(count_distinct_palindromes_word(Word(std::vector<Letter>(n, 0))) == n);
}

TEST_CASE("word count agrees with the oracle exhaustively and at random") {
    for (std::size_t sigma : {2u, 3u}) {
        const std::size_t max_len = sigma == 2 ? 12 : 8;
        for (const auto& word : testing::all_words_up_to(max_len, sigma)) {
            const auto count = count_distinct_palindromes_word(word);
            REQUIRE(count == palindromic_factors(word).size());
            REQUIRE(count <= word.size());
            REQUIRE(count == count_distinct_palindromes_word(reverse(word)));
        }
    }
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(9, 60)(rng);
        const std::size_t sigma = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto word = testing::random_word(rng, len, sigma);
        REQUIRE(count_distinct_palindromes_word(word) == palindromic_factors(word).size());
    }
}
