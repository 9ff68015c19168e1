// anc: nondeterministic automatic complexity of binary words.
// Subcommands: complexity, census, limits, verify, periodic.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "anc/census.hpp"
#include "anc/counting.hpp"
#include "anc/dot.hpp"
#include "anc/formulas.hpp"
#include "anc/oracle.hpp"
#include "anc/reference.hpp"
#include "anc/search.hpp"
#include "anc/word.hpp"

namespace {

std::string default_cache_dir() {
    if (const char* env = std::getenv("ANC_CACHE_DIR"))
        return env;
    return ".anc-cache";
}

int cmd_complexity(const std::string& literal, bool emit_dot, bool emit_run,
                   std::optional<int> upper_bound) {
    anc::Word w = anc::Word::parse(literal);
    anc::SearchOptions opts;
    opts.upper_bound = upper_bound;
    anc::WitnessResult res = anc::complexity(w, opts);
    std::cout << "command=complexity\n";
    std::cout << "word=" << w.to_string() << "\n";
    std::cout << "length=" << w.length() << "\n";
    std::cout << "A_N=" << res.complexity << "\n";
    if (emit_run) {
        std::cout << "run=";
        for (std::size_t i = 0; i < res.run.size(); ++i)
            std::cout << (i ? " " : "") << res.run[i];
        std::cout << "\n";
    }
    if (emit_dot)
        std::cout << anc::export_dot(res.witness, res.run);
    return 0;
}

int cmd_census(int n, int jobs, const std::string& cache_dir,
               const std::string& format, bool force, int limit) {
    anc::CensusProvider provider(jobs, limit);
    anc::CensusTable table;
    if (auto cached = anc::load_census(cache_dir, n)) {
        table = *cached;
    } else {
        table = provider.census(n, {.with_r = true, .force = force});
        anc::save_census(cache_dir, table);
    }
    if (format == "csv")
        std::cout << anc::format_census_csv(table);
    else if (format == "json-lines")
        std::cout << anc::format_census_jsonl(table);
    else
        std::cout << anc::format_census_table(table);
    return 0;
}

int cmd_limits(int max_q, bool per_leading_bit, bool with_r) {
    std::cout << "command=limits max_q=" << max_q << "\n";
    std::cout << "q\tlimit_s" << (per_leading_bit ? "/2" : "")
              << "\tbound\tratio";
    if (with_r)
        std::cout << "\tlimit_r(provisional)";
    std::cout << "\n";
    for (int q = 1; q <= max_q; ++q) {
        anc::BigInt s = anc::limit_s(q);
        std::cout << q << '\t' << (per_leading_bit ? s / 2 : s) << '\t';
        if (q >= 2) {
            anc::BigInt bound = anc::bound_372(q);
            std::cout << bound << '\t'
                      << s.convert_to<double>() / bound.convert_to<double>();
        } else {
            std::cout << "-\t-";
        }
        if (with_r) {
            anc::BigInt r = anc::limit_r(q);
            std::cout << '\t' << (per_leading_bit ? r / 2 : r);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_periodic(int max_n) {
    std::cout << "command=periodic max_n=" << max_n << "\n";
    std::cout << "n\tZ\tnecklaces\n";
    for (int n = 0; n <= max_n; ++n) {
        std::cout << n << '\t' << anc::periodic_count(n) << '\t';
        if (n >= 1)
            std::cout << anc::necklace_count(n);
        else
            std::cout << '-';
        std::cout << "\n";
    }
    return 0;
}

// ---- verify ----

struct CheckRunner {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            std::cout << "ok   " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << (detail.empty() ? "" : ": " + detail)
                      << "\n";
        }
    }
};

int cmd_verify(const std::string& oeis_file, int small_n_limit) {
    using anc::BigInt;
    CheckRunner run;

    // periodic counts against an independent table
    {
        std::vector<BigInt> reference;
        bool loaded = true;
        if (!oeis_file.empty()) {
            std::ifstream in(oeis_file);
            if (!in) {
                run.check("periodic-count-reference", false,
                          "cannot open " + oeis_file);
                loaded = false;
            } else {
                try {
                    reference = anc::parse_integer_sequence(in);
                } catch (const std::exception& e) {
                    run.check("periodic-count-reference", false, e.what());
                    loaded = false;
                }
            }
        } else {
            for (std::uint64_t v : anc::kA152061)
                reference.emplace_back(v);
        }
        if (loaded) {
            anc::OeisReport rep = anc::oeis_crosscheck(reference);
            std::string detail;
            if (!rep.ok()) {
                const auto& m = rep.mismatches.front();
                detail = "index " + std::to_string(m.index) + ": file has " +
                         m.expected.str() + ", computed " + m.computed.str();
            }
            run.check("periodic-count-reference", rep.ok(), detail);
        }
    }

    // Witt identity: n * necklaces(n) + Z(n) == 2^n
    {
        bool ok = true;
        for (int n = 1; n <= 30 && ok; ++n)
            ok = BigInt(n) * anc::necklace_count(n) + anc::periodic_count(n) ==
                 (BigInt(1) << n);
        run.check("necklace-identity", ok);
    }

    // Moebius is multiplicative on coprime pairs
    {
        bool ok = true;
        for (std::uint64_t a = 2; a * 2 <= 10000 && ok; ++a)
            for (std::uint64_t b = a + 1; a * b <= 10000 && ok; ++b)
                if (std::gcd(a, b) == 1)
                    ok = anc::mobius(a * b) == anc::mobius(a) * anc::mobius(b);
        run.check("mobius-multiplicative", ok);
    }

    // direct enumeration of periodic words against the formula
    {
        bool ok = true;
        for (int n = 1; n <= 14 && ok; ++n) {
            std::uint64_t found = 0;
            for (std::uint64_t v = 0; v < (1ull << n); ++v)
                found += anc::is_periodic(anc::Word::from_bits(v, n)) ? 1 : 0;
            ok = BigInt(found) == anc::periodic_count(n);
        }
        run.check("periodic-enumeration", ok);
    }

    // search against the brute-force oracle
    {
        bool ok = true;
        std::string detail;
        anc::ComplexitySearcher searcher;
        for (int n = 0; n <= small_n_limit && ok; ++n) {
            for (std::uint64_t v = 0; v < (1ull << n) && ok; ++v) {
                anc::Word w = anc::Word::from_bits(v, n);
                int got = searcher.complexity(w).complexity;
                int want = anc::oracle::brute_force_complexity(w);
                if (got != want) {
                    ok = false;
                    detail = w.to_string() + ": search " + std::to_string(got) +
                             ", oracle " + std::to_string(want);
                }
            }
        }
        run.check("search-oracle", ok, detail);
    }

    // complement/reverse invariance and the append bound
    {
        bool ok = true;
        anc::ComplexitySearcher searcher;
        for (int n = 1; n <= small_n_limit && ok; ++n) {
            for (std::uint64_t v = 0; v < (1ull << n) && ok; ++v) {
                anc::Word w = anc::Word::from_bits(v, n);
                int q = searcher.complexity(w).complexity;
                ok = searcher.complexity(w.complement()).complexity == q &&
                     searcher.complexity(w.reverse()).complexity == q;
                if (ok && n < small_n_limit)
                    ok = searcher.complexity(w.append(0)).complexity <= q + 1 &&
                         searcher.complexity(w.append(1)).complexity <= q + 1;
            }
        }
        run.check("symmetry-suite", ok);
    }

    // small censuses against known rows
    {
        static constexpr std::uint64_t max_counts[] = {1, 2, 2, 6, 8, 24, 30, 98, 98};
        anc::CensusProvider provider;
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 8 && ok; ++n) {
            anc::CensusTable t = provider.census(n);
            if (t.max_count != max_counts[n]) {
                ok = false;
                detail = "max_count(" + std::to_string(n) + ") = " +
                         std::to_string(t.max_count);
            }
            if (ok && n >= 4 && t.s.at(2) != 6) {
                ok = false;
                detail = "s_2(" + std::to_string(n) + ") != 6";
            }
        }
        if (ok) {
            anc::CensusTable t8 = provider.census(8);
            ok = t8.s.at(3) == 20 && t8.r.at(3) == 8 && t8.s.at(4) == 130 &&
                 t8.r.at(4) == 82 && t8.s.at(5) == 98 && t8.r.at(5) == 0;
            if (!ok)
                detail = "census(8) table row mismatch";
        }
        run.check("census-small-tables", ok, detail);
    }

    // limit formula against its eventual values and the bound
    {
        bool ok = true;
        for (int q = 1; q <= 12 && ok; ++q) {
            BigInt s = anc::limit_s(q);
            if (q >= 2)
                ok = s <= anc::bound_372(q);
        }
        ok = ok && anc::limit_s(1) == 2 && anc::limit_s(2) == 6 &&
             anc::limit_s(3) == 20 && anc::limit_s(4) == 58;
        run.check("limit-formula", ok);
    }

    // path-count DP against naive walk enumeration on small automata
    {
        bool ok = true;
        for (std::uint32_t mask = 0; mask < (1u << 12) && ok; ++mask) {
            std::vector<anc::Transition> trans;
            for (int from = 0; from < 2 && ok; ++from)
                for (int sym = 0; sym < 2; ++sym)
                    for (int to = 0; to < 3; ++to) {
                        int bit = from * 6 + sym * 3 + to;
                        if (mask & (1u << bit))
                            trans.push_back({from, sym, to});
                    }
            for (int accepting = 0; accepting < 3 && ok; ++accepting) {
                anc::Nfa m(3, 0, accepting, trans);
                for (std::size_t len = 0; len <= 5 && ok; ++len)
                    ok = anc::count_accepting_paths(m, len) ==
                         BigInt(anc::oracle::naive_walk_count(m, len));
            }
        }
        run.check("path-count-dp", ok);
    }

    // round-trip of the census serialization formats
    {
        anc::CensusProvider provider;
        anc::CensusTable t = provider.census(6);
        bool ok = anc::parse_census_csv(anc::format_census_csv(t)) == t &&
                  anc::parse_census_jsonl(anc::format_census_jsonl(t)) == t;
        run.check("census-roundtrip", ok);
    }

    std::cout << (run.failures == 0 ? "all checks passed"
                                    : std::to_string(run.failures) +
                                          " check(s) failed")
              << "\n";
    return run.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nondeterministic automatic complexity of binary words"};
    app.require_subcommand(1);

    // complexity
    std::string word_literal;
    bool emit_dot = false, emit_run = false;
    int upper_bound = 0;
    auto* complexity_cmd =
        app.add_subcommand("complexity", "compute A_N(x) and a witness");
    complexity_cmd->add_option("word", word_literal, "binary word, e.g. 011010")
        ->required();
    complexity_cmd->add_flag("--emit-dot", emit_dot, "print the witness in DOT format");
    complexity_cmd->add_flag("--emit-run", emit_run, "print the accepting state sequence");
    complexity_cmd->add_option("--upper-bound", upper_bound,
                               "fail if no witness has at most this many states");

    // census
    int census_n = 0;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1)
        jobs = 1;
    int limit = 16;
    bool force = false;
    std::string format = "table";
    std::string cache_dir = default_cache_dir();
    auto* census_cmd =
        app.add_subcommand("census", "count words of each complexity at one length");
    census_cmd->add_option("n", census_n, "word length")->required();
    census_cmd->add_option("--jobs", jobs, "worker threads");
    census_cmd->add_option("--cache-dir", cache_dir, "census cache directory");
    census_cmd->add_option("--format", format, "table, csv or json-lines")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}));
    census_cmd->add_flag("--force", force, "allow lengths over the feasibility limit");
    census_cmd->add_option("--limit", limit, "feasibility limit (default 16)");

    // limits
    int max_q = 0;
    bool per_leading_bit = false, with_r = false;
    auto* limits_cmd =
        app.add_subcommand("limits", "eventual census values and the upper bound");
    limits_cmd->add_option("max_q", max_q, "largest complexity to print")->required();
    limits_cmd->add_flag("--per-leading-bit", per_leading_bit,
                         "print counts of words starting with a fixed bit");
    limits_cmd->add_flag("--with-r", with_r,
                         "include the provisional right-inextendible limit");

    // verify
    std::string oeis_file;
    int small_n_limit = 6;
    auto* verify_cmd = app.add_subcommand("verify", "run the self-check suite");
    verify_cmd->add_option("--oeis-file", oeis_file,
                           "periodic-count reference sequence (one value per line or comma-separated)");
    verify_cmd->add_option("--small-n-limit", small_n_limit,
                           "exhaustive-check word length cap");

    // periodic
    int periodic_max = 0;
    auto* periodic_cmd =
        app.add_subcommand("periodic", "periodic-word and necklace counts");
    periodic_cmd->add_option("max_n", periodic_max, "largest length to print")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (complexity_cmd->parsed())
            return cmd_complexity(word_literal, emit_dot, emit_run,
                                  complexity_cmd->count("--upper-bound")
                                      ? std::optional<int>(upper_bound)
                                      : std::nullopt);
        if (census_cmd->parsed())
            return cmd_census(census_n, jobs, cache_dir, format, force, limit);
        if (limits_cmd->parsed())
            return cmd_limits(max_q, per_leading_bit, with_r);
        if (verify_cmd->parsed())
            return cmd_verify(oeis_file, small_n_limit);
        if (periodic_cmd->parsed())
            return cmd_periodic(periodic_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
