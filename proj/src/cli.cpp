#include "palinstar/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "palinstar/error.hpp"
#include "palinstar/io.hpp"
#include "palinstar/search.hpp"
#include "palinstar/startree.hpp"

namespace palinstar {

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
    std::string tree_file;
    bool oracle = false;
    bool list = false;
    bool as_json = false;
    std::size_t k = 3;
    std::size_t n = 1;
    std::size_t sigma = 2;
    std::size_t k_max = 5;
    std::size_t n_max = 5;
    bool witnesses = false;
    std::size_t witness_limit = kDefaultWitnessLimit;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    bool force = false;
};

std::uint64_t labeling_cap() {
    const char* env = std::getenv("PALINSTAR_CAP");
    if (env == nullptr || *env == '\0') return kDefaultLabelingCap;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0') throw DomainError(std::string("PALINSTAR_CAP is not an integer: ") + env);
    return value;
}

SearchSpec make_spec(const Options& o, std::size_t k, std::size_t n) {
    SearchSpec spec;
    spec.k = k;
    spec.n = n;
    spec.sigma = o.sigma;
    spec.collect_witnesses = o.witnesses;
    spec.witness_limit = o.witness_limit;
    spec.worker_count = o.jobs;
    spec.labeling_cap = labeling_cap();
    spec.ignore_cap = o.force;
    return spec;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

std::string branch_list(const StarlikeTree& t) {
    std::string s;
    for (const auto& b : t.branches()) {
        if (!s.empty()) s += ',';
        s += format_word(b, t.alphabet());
    }
    return s;
}

int run_count(const Options& o, std::ostream& out) {
    const auto tree = load_tree(o.tree_file);
    const auto palindromes = tree_palindromes(tree);
    const std::size_t count = palindromes.size();
    std::size_t oracle = count;
    if (o.oracle) oracle = oracle_tree_palindromes(tree).size();
    const bool ok = oracle == count;

    if (o.as_json) {
        json doc = {{"count", count}};
        if (o.oracle) {
            doc["oracle"] = oracle;
            doc["match"] = ok;
        }
        if (o.list) {
            doc["palindromes"] = json::array();
            for (const auto& p : palindromes) doc["palindromes"].push_back(format_word(p, tree.alphabet()));
        }
        emit(out, doc);
    } else {
        out << count << '\n';
        if (o.oracle) out << "oracle " << oracle << (ok ? " match" : " MISMATCH") << '\n';
        if (o.list)
            for (const auto& p : palindromes) out << format_word(p, tree.alphabet()) << '\n';
    }
    return ok ? kOk : kFailed;
}

int run_bounds(const Options& o, std::ostream& out) {
    const auto tree = load_tree(o.tree_file);
    const std::size_t count = count_tree_palindromes(tree);
    json doc = {{"count", count}, {"branch_length_bound", branch_length_bound(tree)}};
    bool ok = count <= branch_length_bound(tree);
    if (const auto n = tree.uniform_length()) {
        doc["equal_length_bound"] = equal_length_bound(tree.branch_count(), *n);
        if (tree.branch_count() == 3 && tree.alphabet().size() <= 2) {
            doc["binary_three_branch_bound"] = binary_three_branch_bound(*n);
            ok = ok && count <= binary_three_branch_bound(*n);
        }
    }
    doc["within_bounds"] = ok;
    if (o.as_json) {
        emit(out, doc);
    } else {
        for (const char* key : {"count", "branch_length_bound", "equal_length_bound", "binary_three_branch_bound"})
            if (doc.contains(key)) out << key << ' ' << doc[key].get<std::size_t>() << '\n';
    }
    return ok ? kOk : kFailed;
}

int run_ledger(const Options& o, std::ostream& out) {
    const auto tree = load_tree(o.tree_file);
    const auto d = decompose(tree);
    const auto ledger = palindrome_ledger(tree);
    if (o.as_json) {
        json entries = json::array();
        for (std::size_t p = 0; p < ledger.entries.size(); ++p) {
            const auto& e = ledger.entries[p];
            entries.push_back({{"path", {e.first + 1, e.second + 1}},
                               {"word", format_word(d.paths[p].word, tree.alphabet())},
                               {"new", e.new_count},
                               {"bound", e.bound}});
        }
        emit(out, {{"entries", std::move(entries)}, {"total", ledger.total}, {"within_bounds", ledger.within_bounds()}});
    } else {
        for (std::size_t p = 0; p < ledger.entries.size(); ++p) {
            const auto& e = ledger.entries[p];
            out << '(' << e.first + 1 << ',' << e.second + 1 << ") " << format_word(d.paths[p].word, tree.alphabet())
                << " new=" << e.new_count << " bound=" << e.bound << (e.new_count > e.bound ? " EXCEEDED" : "")
                << '\n';
        }
        out << "total " << ledger.total << '\n';
    }
    return ledger.within_bounds() ? kOk : kFailed;
}

int run_search(const Options& o, std::ostream& out) {
    const auto result = max_palindromes(make_spec(o, o.k, o.n));
    if (o.as_json) {
        emit(out, search_result_to_json(result));
    } else {
        out << "max=" << result.max_count << '\n'
            << "classes=" << result.classes_examined << " labelings=" << result.labelings_total
            << " ties=" << result.witness_total << '\n'
            << "elapsed_ms=" << result.elapsed.count() << '\n';
        for (const auto& w : result.witnesses) out << "witness " << branch_list(w) << '\n';
    }
    return kOk;
}

std::string csv_cell(const std::string& cell) {
    if (cell.find_first_of(",\"") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

int run_table(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k_max < 3) throw DomainError("--k-max must be at least 3");
    if (o.n_max < 1) throw DomainError("--n-max must be at least 1");
    json rows = json::array();
    std::vector<std::vector<std::string>> cells;
    for (std::size_t n = 1; n <= o.n_max; ++n) {
        json row = {{"n", n}, {"cells", json::array()}};
        std::vector<std::string> line{std::to_string(n)};
        for (std::size_t k = 3; k <= o.k_max; ++k) {
            const std::size_t bound = equal_length_bound(k, n);
            try {
                const auto result = max_palindromes(make_spec(o, k, n));
                line.push_back(std::to_string(result.max_count) + "," + std::to_string(bound));
                row["cells"].push_back({{"k", k}, {"P", result.max_count}, {"bound", bound}});
            } catch (const CapExceeded& e) {
                err << "warning: skipping k=" << k << " n=" << n << ": " << e.what() << '\n';
                line.emplace_back("SKIPPED");
                row["cells"].push_back({{"k", k}, {"P", nullptr}, {"bound", bound}, {"skipped", true}});
            }
        }
        rows.push_back(std::move(row));
        cells.push_back(std::move(line));
    }

    if (o.as_json) {
        emit(out, {{"sigma", o.sigma}, {"rows", std::move(rows)}});
        return kOk;
    }
    out << 'n';
    for (std::size_t k = 3; k <= o.k_max; ++k) out << ",k=" << k;
    out << '\n';
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_cell(line[i]);
        out << '\n';
    }
    return kOk;
}

int run_extremal(const Options& o, std::ostream& out) {
    const auto tree = extremal_tree(o.n);
    const std::size_t count = count_tree_palindromes(tree);
    const std::size_t expected = 4 * o.n - 2;
    if (o.as_json) {
        emit(out, {{"tree", tree_to_json(tree)}, {"count", count}, {"expected", expected}});
    } else {
        out << format_tree(tree) << '\n' << "count " << count << '\n' << "expected " << expected << '\n';
    }
    return count == expected ? kOk : kFailed;
}

int run_conjecture(const Options& o, std::ostream& out) {
    const auto rows = conjecture_check(o.n_max, make_spec(o, 3, o.n_max));
    bool ok = true;
    json doc = json::array();
    for (const auto& r : rows) {
        ok = ok && r.match;
        doc.push_back({{"n", r.n}, {"P", r.empirical}, {"predicted", r.predicted}, {"match", r.match}});
    }
    if (o.as_json) {
        emit(out, {{"sigma", o.sigma}, {"rows", std::move(doc)}, {"all_match", ok}});
    } else {
        for (const auto& r : rows)
            out << "n=" << r.n << " P=" << r.empirical << " 4n-2=" << r.predicted << (r.match ? " match" : " MISMATCH")
                << '\n';
    }
    return ok ? kOk : kFailed;
}

int run_verify(const Options& o, std::ostream& out) {
    const auto report = verify_bounds(make_spec(o, o.k, o.n));
    if (o.as_json) {
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"tree", tree_to_json(v.tree)}, {"kind", v.kind}, {"detail", v.detail}});
        emit(out, {{"k", o.k},
                   {"n", o.n},
                   {"sigma", o.sigma},
                   {"max", report.max_count},
                   {"classes", report.classes_checked},
                   {"violations", std::move(violations)}});
    } else {
        out << report.violations.size() << " violations, max=" << report.max_count << '\n';
        for (const auto& v : report.violations) out << v.kind << ' ' << branch_list(v.tree) << ' ' << v.detail << '\n';
    }
    return report.ok() ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Distinct palindromes in edge-labelled starlike trees", "palinstar"};
    app.require_subcommand(1, 1);

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "Machine-readable JSON output"); };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--sigma", o.sigma, "Alphabet size")->check(CLI::Range(std::size_t{1}, kMaxSearchAlphabet));
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--force", o.force, "Ignore the enumeration cap (PALINSTAR_CAP)");
        add_json(sub);
    };

    auto* count = app.add_subcommand("count", "Count distinct palindromes in a tree file");
    count->add_option("tree", o.tree_file, "Tree file (JSON)")->required();
    count->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
    count->add_flag("--list", o.list, "List palindromes by length, then lexicographically");
    add_json(count);

    auto* bounds = app.add_subcommand("bounds", "Evaluate the upper bounds for a tree file");
    bounds->add_option("tree", o.tree_file, "Tree file (JSON)")->required();
    add_json(bounds);

    auto* ledger = app.add_subcommand("ledger", "Palindromes discovered per cross path against allowances");
    ledger->add_option("tree", o.tree_file, "Tree file (JSON)")->required();
    add_json(ledger);

    auto* search = app.add_subcommand("search", "Exhaustive maximum over all labelings of a (k,n) tree");
    search->add_option("--k", o.k, "Number of branches")->required();
    search->add_option("--n", o.n, "Branch length")->required();
    search->add_flag("--witnesses", o.witnesses, "Collect canonical trees attaining the maximum");
    search->add_option("--witness-limit", o.witness_limit, "Maximum number of witnesses kept");
    add_search(search);

    auto* table = app.add_subcommand("table", "CSV table of maxima and equal-length bounds");
    table->add_option("--k-max", o.k_max, "Largest branch count");
    table->add_option("--n-max", o.n_max, "Largest branch length");
    add_search(table);

    auto* extremal = app.add_subcommand("extremal", "Build a^n, ba^(n-1), bba^(n-2) and count its palindromes");
    extremal->add_option("--n", o.n, "Branch length (>= 2)")->required();
    add_json(extremal);

    auto* conjecture = app.add_subcommand("conjecture", "Compare exhaustive P(3,n) with 4n-2 for n = 2..n-max");
    conjecture->add_option("--n-max", o.n_max, "Largest branch length")->required();
    add_search(conjecture);

    auto* verify = app.add_subcommand("verify", "Check every labeling class against the bounds");
    verify->add_option("--k", o.k, "Number of branches")->required();
    verify->add_option("--n", o.n, "Branch length")->required();
    add_search(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) return run_count(o, out);
        if (bounds->parsed()) return run_bounds(o, out);
        if (ledger->parsed()) return run_ledger(o, out);
        if (search->parsed()) return run_search(o, out);
        if (table->parsed()) return run_table(o, out, err);
        if (extremal->parsed()) return run_extremal(o, out);
        if (conjecture->parsed()) return run_conjecture(o, out);
        if (verify->parsed()) return run_verify(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace palinstar
