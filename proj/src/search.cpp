#include "palinstar/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "palinstar/eertree.hpp"
#include "palinstar/error.hpp"

namespace palinstar {

std::uint64_t labeling_count(std::size_t k, std::size_t n, std::size_t sigma) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k * n; ++i) {
        if (sigma != 0 && total > kMax / sigma) return kMax;
        total *= sigma;
    }
    return total;
}

namespace {

// Largest branch-word table the enumerator will materialize.
constexpr std::uint64_t kMaxWordTable = std::uint64_t{1} << 22;

}  // namespace

void check_search_spec(const SearchSpec& spec) {
    if (spec.k < 3) throw DomainError("search requires k >= 3");
    if (spec.n < 1) throw DomainError("search requires n >= 1");
    if (spec.sigma < 1 || spec.sigma > kMaxSearchAlphabet)
        throw DomainError("search requires 1 <= sigma <= " + std::to_string(kMaxSearchAlphabet));
    if (spec.worker_count < 1) throw DomainError("worker_count must be positive");
    if (labeling_count(1, spec.n, spec.sigma) > kMaxWordTable)
        throw DomainError("branch length " + std::to_string(spec.n) + " is too long to enumerate");
    const auto labelings = labeling_count(spec.k, spec.n, spec.sigma);
    if (!spec.ignore_cap && labelings > spec.labeling_cap)
        throw CapExceeded("(k=" + std::to_string(spec.k) + ", n=" + std::to_string(spec.n) +
                          ", sigma=" + std::to_string(spec.sigma) + ") has " + std::to_string(labelings) +
                          " labelings, above the cap of " + std::to_string(spec.labeling_cap) +
                          "; raise the cap or override it to run anyway");
}

namespace {

using Tuple = std::vector<std::uint32_t>;

// Every branch word of length n as an index whose base-sigma digits, most
// significant first, are the letters read outward from the central vertex.
// Index order is therefore lexicographic word order.
class LabelingTables {
public:
    LabelingTables(std::size_t k, std::size_t n, std::size_t sigma)
        : k_(k), n_(n), sigma_(sigma), alphabet_(Alphabet::first(sigma)) {
        word_count_ = static_cast<std::uint32_t>(labeling_count(1, n, sigma));
        letters_.resize(static_cast<std::size_t>(word_count_) * n);
        for (std::uint32_t w = 0; w < word_count_; ++w) {
            std::uint32_t rest = w;
            for (std::size_t p = n; p-- > 0;) {
                letters_[w * n + p] = static_cast<Letter>(rest % sigma);
                rest /= static_cast<std::uint32_t>(sigma);
            }
        }

        std::vector<Letter> perm(sigma);
        std::iota(perm.begin(), perm.end(), Letter{0});
        perm_count_ = 0;
        do {
            ++perm_count_;
            if (std::is_sorted(perm.begin(), perm.end())) continue;
            std::vector<std::uint32_t> image(word_count_);
            for (std::uint32_t w = 0; w < word_count_; ++w) {
                std::uint32_t idx = 0;
                for (std::size_t p = 0; p < n; ++p)
                    idx = idx * static_cast<std::uint32_t>(sigma) + perm[letters_[w * n + p]];
                image[w] = idx;
            }
            relabelings_.push_back(std::move(image));
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (std::uint32_t w = 0; w < word_count_; ++w) {
            const bool minimal = std::all_of(relabelings_.begin(), relabelings_.end(),
                                             [w](const auto& image) { return image[w] >= w; });
            if (minimal) leading_words_.push_back(w);
        }

        factorial_.assign(k + 1, 1);
        for (std::size_t i = 1; i <= k; ++i) factorial_[i] = factorial_[i - 1] * i;
    }

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::uint32_t word_count() const noexcept { return word_count_; }
    const Letter* letters(std::uint32_t w) const noexcept { return &letters_[static_cast<std::size_t>(w) * n_]; }

    // First branches that can start a canonical tuple: words that are least
    // among their own relabelings (letters in first-occurrence order).
    const std::vector<std::uint32_t>& leading_words() const noexcept { return leading_words_; }

    // 0 if the sorted tuple is not the least image under relabeling; otherwise
    // the number of ordered labelings in its class.
    std::uint64_t canonical_orbit(const Tuple& tuple, Tuple& scratch) const {
        std::uint64_t stabilizer = 1;
        scratch.resize(tuple.size());
        for (const auto& image : relabelings_) {
            for (std::size_t i = 0; i < tuple.size(); ++i) scratch[i] = image[tuple[i]];
            std::sort(scratch.begin(), scratch.end());
            const auto cmp = std::lexicographical_compare_three_way(scratch.begin(), scratch.end(),
                                                                    tuple.begin(), tuple.end());
            if (cmp < 0) return 0;
            if (cmp == 0) ++stabilizer;
        }
        std::uint64_t arrangements = factorial_[tuple.size()];
        for (std::size_t i = 0; i < tuple.size();) {
            std::size_t j = i;
            while (j < tuple.size() && tuple[j] == tuple[i]) ++j;
            arrangements /= factorial_[j - i];
            i = j;
        }
        return perm_count_ / stabilizer * arrangements;
    }

    StarlikeTree tree(const Tuple& tuple) const {
        std::vector<Word> branches;
        branches.reserve(tuple.size());
        for (auto w : tuple) {
            const Letter* s = letters(w);
            branches.emplace_back(std::vector<Letter>(s, s + n_));
        }
        return StarlikeTree(alphabet_, std::move(branches));
    }

private:
    std::size_t k_;
    std::size_t n_;
    std::size_t sigma_;
    Alphabet alphabet_;
    std::uint32_t word_count_ = 0;
    std::vector<Letter> letters_;
    std::vector<std::vector<std::uint32_t>> relabelings_;  // non-identity only
    std::uint64_t perm_count_ = 1;
    std::vector<std::uint32_t> leading_words_;
    std::vector<std::uint64_t> factorial_;
};

// Visits canonical sorted tuples whose first branch is `lead`, in
// lexicographic order.
template <class Visit>
void for_each_canonical(const LabelingTables& tables, std::uint32_t lead, Visit&& visit) {
    const std::size_t k = tables.k();
    Tuple tuple(k, lead);
    Tuple scratch;
    for (;;) {
        if (const auto orbit = tables.canonical_orbit(tuple, scratch); orbit != 0) visit(tuple, orbit);
        // Advance positions 1..k-1 as a non-decreasing odometer.
        std::size_t pos = k - 1;
        while (pos >= 1 && tuple[pos] + 1 == tables.word_count()) --pos;
        if (pos == 0) return;
        const auto v = tuple[pos] + 1;
        std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(pos), tuple.end(), v);
    }
}

// Counts palindromes of a labeled (k,n) tree from word indices, without
// building Word objects. Paths follow the decomposition order.
class TupleCounter {
public:
    explicit TupleCounter(const LabelingTables& tables, std::size_t sigma) : tables_(tables), tree_(sigma) {}

    template <class OnPath>
    std::size_t count(const Tuple& tuple, OnPath&& on_path) {
        tree_.clear();
        const std::size_t n = tables_.n();
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            const Letter* left = tables_.letters(tuple[i]);
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                const Letter* right = tables_.letters(tuple[j]);
                const std::size_t before = tree_.node_count();
                tree_.start_new_string();
                for (std::size_t p = n; p-- > 0;) tree_.add_letter(left[p]);
                for (std::size_t p = 0; p < n; ++p) tree_.add_letter(right[p]);
                on_path(i, j, tree_.node_count() - before);
            }
        }
        return tree_.node_count();
    }

    std::size_t count(const Tuple& tuple) {
        return count(tuple, [](std::size_t, std::size_t, std::size_t) {});
    }

private:
    const LabelingTables& tables_;
    Eertree tree_;
};

template <class Fn>
void run_chunks(std::size_t chunks, std::size_t workers, Fn&& fn) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(chunks, 1));
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t c; (c = next.fetch_add(1, std::memory_order_relaxed)) < chunks;) fn(c);
    };
    if (workers == 1) {
        loop();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
}

}  // namespace

StarlikeTree canonical_form(const StarlikeTree& t) {
    std::vector<bool> used(t.alphabet().size(), false);
    for (const auto& b : t.branches())
        for (Letter c : b) used[c] = true;
    std::vector<Letter> present;
    for (std::size_t c = 0; c < used.size(); ++c)
        if (used[c]) present.push_back(static_cast<Letter>(c));
    if (present.size() > 10) throw DomainError("canonical_form supports at most 10 distinct letters");

    // The least image maps the letters in use onto 0..m-1; order-preserving
    // compression never increases a sorted tuple.
    std::vector<Letter> target(present.size());
    std::iota(target.begin(), target.end(), Letter{0});
    std::vector<Letter> relabel(t.alphabet().size(), 0);
    std::vector<Word> best;
    do {
        for (std::size_t i = 0; i < present.size(); ++i) relabel[present[i]] = target[i];
        std::vector<Word> image;
        image.reserve(t.branch_count());
        for (const auto& b : t.branches()) {
            std::vector<Letter> letters;
            letters.reserve(b.size());
            for (Letter c : b) letters.push_back(relabel[c]);
            image.emplace_back(std::move(letters));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(target.begin(), target.end()));
    return StarlikeTree(t.alphabet(), std::move(best));
}

void enumerate_canonical(const SearchSpec& spec, const std::function<void(const CanonicalClass&)>& visit) {
    check_search_spec(spec);
    const LabelingTables tables(spec.k, spec.n, spec.sigma);
    for (auto lead : tables.leading_words())
        for_each_canonical(tables, lead, [&](const Tuple& tuple, std::uint64_t orbit) {
            visit(CanonicalClass{tables.tree(tuple), orbit});
        });
}

std::vector<CanonicalClass> enumerate_canonical(const SearchSpec& spec) {
    std::vector<CanonicalClass> out;
    enumerate_canonical(spec, [&](const CanonicalClass& c) { out.push_back(c); });
    return out;
}

SearchResult max_palindromes(const SearchSpec& spec) {
    check_search_spec(spec);
    const auto start = std::chrono::steady_clock::now();
    const LabelingTables tables(spec.k, spec.n, spec.sigma);
    const auto& leads = tables.leading_words();
    const std::size_t limit = spec.collect_witnesses ? spec.witness_limit : 0;

    struct ChunkBest {
        std::size_t max = 0;
        std::uint64_t ties = 0;
        std::uint64_t classes = 0;
        std::vector<Tuple> witnesses;
    };
    std::vector<ChunkBest> chunks(leads.size());

    run_chunks(leads.size(), spec.worker_count, [&](std::size_t c) {
        TupleCounter counter(tables, spec.sigma);
        ChunkBest& best = chunks[c];
        for_each_canonical(tables, leads[c], [&](const Tuple& tuple, std::uint64_t) {
            ++best.classes;
            const std::size_t count = counter.count(tuple);
            if (count > best.max) {
                best.max = count;
                best.ties = 0;
                best.witnesses.clear();
            }
            if (count == best.max) {
                ++best.ties;
                if (best.witnesses.size() < limit) best.witnesses.push_back(tuple);
            }
        });
    });

    SearchResult result;
    result.k = spec.k;
    result.n = spec.n;
    result.sigma = spec.sigma;
    result.labelings_total = labeling_count(spec.k, spec.n, spec.sigma);
    for (const auto& c : chunks) result.max_count = std::max(result.max_count, c.max);
    for (const auto& c : chunks) {
        result.classes_examined += c.classes;
        if (c.max != result.max_count) continue;
        result.witness_total += c.ties;
        for (const auto& w : c.witnesses) {
            if (result.witnesses.size() >= limit) break;
            result.witnesses.push_back(tables.tree(w));
        }
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

BoundsReport verify_bounds(const SearchSpec& spec) {
    check_search_spec(spec);
    const LabelingTables tables(spec.k, spec.n, spec.sigma);
    const auto& leads = tables.leading_words();
    const std::size_t n = spec.n;
    const std::size_t tree_bound = equal_length_bound(spec.k, n);
    const bool binary_three = spec.sigma <= 2 && spec.k == 3;

    struct Finding {
        Tuple tuple;
        std::string kind;
        std::string detail;
    };
    struct ChunkReport {
        std::size_t max = 0;
        std::uint64_t classes = 0;
        std::vector<Finding> findings;
    };
    std::vector<ChunkReport> chunks(leads.size());

    run_chunks(leads.size(), spec.worker_count, [&](std::size_t c) {
        TupleCounter counter(tables, spec.sigma);
        ChunkReport& report = chunks[c];
        std::vector<Finding> path_findings;
        for_each_canonical(tables, leads[c], [&](const Tuple& tuple, std::uint64_t) {
            ++report.classes;
            bool first_path = true;
            const std::size_t count = counter.count(tuple, [&](std::size_t i, std::size_t j, std::size_t fresh) {
                const std::size_t allowance = first_path ? 2 * n : n;
                first_path = false;
                if (fresh > allowance)
                    report.findings.push_back({tuple, "ledger",
                                               "path (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                   ") discovered " + std::to_string(fresh) + " > " +
                                                   std::to_string(allowance)});
            });
            report.max = std::max(report.max, count);
            if (count > tree_bound)
                report.findings.push_back(
                    {tuple, "branch_length_bound", std::to_string(count) + " > " + std::to_string(tree_bound)});
            if (binary_three && count > 4 * n - 1)
                report.findings.push_back({tuple, "binary_three_branch_bound",
                                           std::to_string(count) + " > " + std::to_string(4 * n - 1)});
        });
    });

    BoundsReport out;
    for (auto& c : chunks) {
        out.max_count = std::max(out.max_count, c.max);
        out.classes_checked += c.classes;
        for (auto& f : c.findings) out.violations.push_back({tables.tree(f.tuple), std::move(f.kind), std::move(f.detail)});
    }
    return out;
}

StarlikeTree extremal_tree(std::size_t n) {
    if (n < 2) throw DomainError("the extremal family needs n >= 2");
    std::vector<Letter> first(n, 0), second(n, 0), third(n, 0);
    second[0] = 1;
    third[0] = 1;
    third[1] = 1;
    return StarlikeTree(Alphabet::first(2), {Word(std::move(first)), Word(std::move(second)), Word(std::move(third))});
}

std::vector<ConjectureRow> conjecture_check(std::size_t n_max, const SearchSpec& base) {
    if (n_max < 2) throw DomainError("conjecture_check needs n_max >= 2");
    SearchSpec spec = base;
    spec.k = 3;
    spec.n = n_max;
    spec.collect_witnesses = false;
    check_search_spec(spec);

    std::vector<ConjectureRow> rows;
    for (std::size_t n = 2; n <= n_max; ++n) {
        spec.n = n;
        const auto result = max_palindromes(spec);
        const std::size_t predicted = 4 * n - 2;
        rows.push_back({n, result.max_count, predicted, result.max_count == predicted});
    }
    return rows;
}

std::size_t growth_delta(const StarlikeTree& t, std::size_t branch_index, Letter c) {
    if (branch_index >= t.branch_count())
        throw DomainError("branch index " + std::to_string(branch_index) + " out of range");
    if (c >= t.alphabet().size()) throw DomainError("letter index outside the alphabet");
    std::vector<Word> branches(t.branches().begin(), t.branches().end());
    branches[branch_index] = branches[branch_index].appended(c);
    const StarlikeTree grown(t.alphabet(), std::move(branches));
    return count_tree_palindromes(grown) - count_tree_palindromes(t);
}

}  // namespace palinstar
