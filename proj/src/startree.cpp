#include "palinstar/startree.hpp"

#include <algorithm>
#include <functional>

#include "palinstar/eertree.hpp"
#include "palinstar/error.hpp"

namespace palinstar {

StarlikeTree::StarlikeTree(Alphabet alphabet, std::vector<Word> branches)
    : alphabet_(std::move(alphabet)), branches_(std::move(branches)) {
    if (branches_.size() < 3)
        throw ValidationError("a starlike tree needs at least 3 branches, got " +
                              std::to_string(branches_.size()));
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].empty())
            throw ValidationError("branch " + std::to_string(i + 1) + " is empty");
        if (branches_[i].letter_bound() > alphabet_.size())
            throw InvalidLetter("branch " + std::to_string(i + 1) + " uses a letter outside the alphabet");
    }
}

std::optional<std::size_t> StarlikeTree::uniform_length() const noexcept {
    const std::size_t n = branches_.front().size();
    for (const auto& b : branches_)
        if (b.size() != n) return std::nullopt;
    return n;
}

StarlikeTree make_tree(const std::vector<std::string>& branches, std::size_t alphabet_size) {
    auto alphabet = Alphabet::first(alphabet_size);
    std::vector<Word> words;
    words.reserve(branches.size());
    for (const auto& b : branches) words.push_back(parse_word(b, alphabet));
    return StarlikeTree(std::move(alphabet), std::move(words));
}

PathDecomposition decompose(const StarlikeTree& t) {
    PathDecomposition d;
    d.ordered_branches.assign(t.branches().begin(), t.branches().end());
    std::sort(d.ordered_branches.begin(), d.ordered_branches.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    const std::size_t k = d.ordered_branches.size();
    d.paths.reserve(k * (k - 1) / 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            d.paths.push_back({i, j, reverse_concat(d.ordered_branches[i], d.ordered_branches[j])});
    return d;
}

std::vector<Word> cross_paths(const StarlikeTree& t) {
    auto d = decompose(t);
    std::vector<Word> out;
    out.reserve(d.paths.size());
    for (auto& p : d.paths) out.push_back(std::move(p.word));
    return out;
}

namespace {

Eertree build_eertree(const StarlikeTree& t) {
    Eertree tree(t.alphabet().size());
    for (const auto& path : cross_paths(t)) tree.add_string(path);
    return tree;
}

}  // namespace

std::size_t count_tree_palindromes(const StarlikeTree& t) { return build_eertree(t).node_count(); }

std::vector<Word> tree_palindromes(const StarlikeTree& t) {
    auto out = build_eertree(t).palindromes();
    std::sort(out.begin(), out.end(), ShortlexLess{});
    return out;
}

std::set<Word> oracle_tree_palindromes(const StarlikeTree& t) {
    std::set<Word> all;
    for (const auto& path : cross_paths(t)) all.merge(palindromic_factors(path));
    return all;
}

std::size_t branch_length_bound(std::span<const std::size_t> lengths) {
    std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    std::size_t bound = sorted.empty() ? 0 : sorted.front();
    for (std::size_t i = 1; i < sorted.size(); ++i) bound += i * sorted[i];
    return bound;
}

std::size_t branch_length_bound(const StarlikeTree& t) {
    std::vector<std::size_t> lengths;
    for (const auto& b : t.branches()) lengths.push_back(b.size());
    return branch_length_bound(lengths);
}

std::size_t equal_length_bound(std::size_t k, std::size_t n) {
    if (k < 3) throw DomainError("equal_length_bound requires k >= 3");
    if (n < 1) throw DomainError("equal_length_bound requires n >= 1");
    return (1 + k * (k - 1) / 2) * n;
}

std::size_t binary_three_branch_bound(std::size_t n) {
    if (n < 1) throw DomainError("binary_three_branch_bound requires n >= 1");
    return 4 * n - 1;
}

bool PalindromeLedger::within_bounds() const noexcept {
    return std::all_of(entries.begin(), entries.end(),
                       [](const LedgerEntry& e) { return e.new_count <= e.bound; });
}

PalindromeLedger palindrome_ledger(const StarlikeTree& t) {
    const auto d = decompose(t);
    Eertree tree(t.alphabet().size());
    PalindromeLedger ledger;
    for (std::size_t p = 0; p < d.paths.size(); ++p) {
        const auto& path = d.paths[p];
        const std::size_t bound = p == 0 ? d.ordered_branches[0].size() + d.ordered_branches[1].size()
                                         : d.ordered_branches[path.second].size();
        const std::size_t created = tree.add_string(path.word);
        ledger.entries.push_back({path.first, path.second, created, bound});
        ledger.total += created;
    }
    return ledger;
}

namespace {

std::vector<Word> palindromic_suffixes(const Word& w) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= w.size(); ++len) {
        Word s = w.factor(w.size() - len, len);
        if (is_palindrome(s)) out.push_back(std::move(s));
    }
    return out;
}

bool has_suffix(const Word& w, const Word& s) {
    return s.size() <= w.size() &&
           std::equal(s.begin(), s.end(), w.begin() + static_cast<std::ptrdiff_t>(w.size() - s.size()));
}

}  // namespace

LastPositionReport last_position_check(const StarlikeTree& t) {
    if (t.alphabet().size() > 2) throw Inapplicable("last_position_check needs a binary alphabet");
    if (t.branch_count() != 3) throw Inapplicable("last_position_check needs exactly 3 branches");
    const auto n = t.uniform_length();
    if (!n) throw Inapplicable("last_position_check needs equal branch lengths");

    const auto branches = decompose(t).ordered_branches;
    const std::size_t last = *n - 1;
    std::size_t yi = 0, zi = 0, xi = 0;
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i)
        for (std::size_t j = i + 1; j < 3 && !found; ++j)
            if (branches[i][last] == branches[j][last]) {
                yi = i;
                zi = j;
                xi = 3 - i - j;
                found = true;
            }
    // With two letters some pair always agrees; only reachable with sigma 1.
    if (!found) throw Inapplicable("no two branches share their final letter");

    LastPositionReport report{branches[xi], branches[yi], branches[zi], {}, {}};
    const Word xy = reverse_concat(report.x, report.y);
    const Word yz = reverse_concat(report.y, report.z);
    const Word xz = reverse_concat(report.x, report.z);

    for (auto& s : palindromic_suffixes(xz))
        if (!has_suffix(xy, s)) report.not_suffix_of_xy.push_back(std::move(s));

    Eertree tree(t.alphabet().size());
    tree.add_string(xy);
    tree.add_string(yz);
    tree.start_new_string();
    for (std::size_t i = 0; i + 1 < xz.size(); ++i) tree.add_letter(xz[i]);
    // Only the longest palindromic suffix can be new at the final position.
    if (tree.add_letter(xz[xz.size() - 1]) == 1) report.genuinely_new.push_back(tree.palindrome(tree.active()));
    return report;
}

}  // namespace palinstar
