#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "anc/counting.hpp"
#include "anc/formulas.hpp"
#include "anc/search.hpp"
#include "anc/word.hpp"

namespace anc {

inline constexpr int kCensusFormatVersion = 1;

// Per-length census: s maps complexity q to the number of length-n words
// with that complexity, r to the number of those that are right
// inextendible (both one-letter extensions raise the complexity by one).
struct CensusTable {
    int length = 0;
    std::map<int, std::uint64_t> s;
    std::map<int, std::uint64_t> r;
    int max_complexity = 0;
    std::uint64_t max_count = 0;

    void refresh_max() {
        max_complexity = 0;
        max_count = 0;
        for (const auto& [q, count] : s) {
            if (count > 0 && q >= max_complexity) {
                max_complexity = q;
                max_count = count;
            }
        }
    }

    friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

struct CensusOptions {
    bool with_r = true;
    bool force = false; // ignore the feasibility limit
};

// Computes and memoizes per-word complexities, one array per word length.
// Only words starting with 0 are stored; the complement of a word has the
// same complexity, which doubles every count. Arrays are filled by
// partitioning the index range over worker threads; the result does not
// depend on the partition.
class CensusProvider {
public:
    explicit CensusProvider(int jobs = 1, int feasibility_limit = 16)
        : jobs_(jobs < 1 ? 1 : jobs), feasibility_limit_(feasibility_limit) {}

    int feasibility_limit() const { return feasibility_limit_; }

    // complexities of the 2^(n-1) words 0y of length n; index = value of y
    const std::vector<std::uint8_t>& complexities(int n) {
        auto it = memo_.find(n);
        if (it != memo_.end())
            return it->second;
        std::vector<std::uint8_t> arr = compute(n);
        return memo_.emplace(n, std::move(arr)).first->second;
    }

    CensusTable census(int n, CensusOptions opts = {}) {
        if (n < 0)
            throw std::invalid_argument("census: negative length");
        if (n > feasibility_limit_ && !opts.force)
            throw std::invalid_argument(
                "census: length " + std::to_string(n) +
                " exceeds the feasibility limit " +
                std::to_string(feasibility_limit_) + " (use force to override)");

        CensusTable table;
        table.length = n;
        const auto& arr = complexities(n);
        std::uint64_t pair = n == 0 ? 1 : 2; // the empty word is self-paired
        for (std::uint8_t q : arr)
            table.s[q] += pair;
        for (int q = 1; q <= std::prev(table.s.end())->first; ++q) {
            table.s.try_emplace(q, 0);
            table.r.try_emplace(q, 0);
        }
        if (opts.with_r && n >= 1) {
            const auto& ext = complexities(n + 1);
            std::uint64_t half = 1ull << (n - 1);
            for (std::uint64_t idx = 0; idx < half; ++idx) {
                int q = arr[idx];
                int q0 = ext[idx];
                int q1 = ext[idx | (1ull << (n - 1))];
                if (q0 == q + 1 && q1 == q + 1)
                    table.r[q] += pair;
            }
        }
        table.refresh_max();
        return table;
    }

private:
    std::vector<std::uint8_t> compute(int n) {
        if (n == 0)
            return {1};
        std::uint64_t size = 1ull << (n - 1);
        std::vector<std::uint8_t> arr(size);
        int workers = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs_), size));
        auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
            ComplexitySearcher searcher;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                Word w = Word::from_bits(idx << 1, static_cast<std::size_t>(n));
                arr[idx] = static_cast<std::uint8_t>(searcher.complexity(w).complexity);
            }
        };
        if (workers <= 1) {
            fill(0, size);
        } else {
            std::vector<std::thread> threads;
            std::uint64_t chunk = (size + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::uint64_t lo = chunk * w;
                std::uint64_t hi = std::min(size, lo + chunk);
                if (lo < hi)
                    threads.emplace_back(fill, lo, hi);
            }
            for (auto& t : threads)
                t.join();
        }
        return arr;
    }

    int jobs_;
    int feasibility_limit_;
    std::map<int, std::vector<std::uint8_t>> memo_;
};

// ---- stabilization ----

struct StabilizationReport {
    int q = 0;
    int n_lo = 0;
    int n_hi = 0;
    std::vector<std::uint64_t> values;  // s_q(n) for n in [n_lo, n_hi]
    std::optional<int> last_change;     // largest n whose value differs from n-1
    std::uint64_t tail_value = 0;
    bool tail_matches_limit = false;
};

inline StabilizationReport stabilization_report(CensusProvider& provider,
                                                int q, int n_lo, int n_hi,
                                                bool force = false) {
    if (q < 1 || n_lo < 1 || n_hi < n_lo)
        throw std::invalid_argument("stabilization_report: bad range");
    StabilizationReport rep;
    rep.q = q;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    for (int n = n_lo; n <= n_hi; ++n) {
        CensusTable t = provider.census(n, {.with_r = false, .force = force});
        auto it = t.s.find(q);
        rep.values.push_back(it == t.s.end() ? 0 : it->second);
    }
    for (std::size_t i = 1; i < rep.values.size(); ++i)
        if (rep.values[i] != rep.values[i - 1])
            rep.last_change = n_lo + static_cast<int>(i);
    rep.tail_value = rep.values.back();
    rep.tail_matches_limit = BigInt(rep.tail_value) == limit_s(q);
    return rep;
}

// ---- OEIS cross-check ----

// One integer per line or comma-separated, indices from 0.
inline std::vector<BigInt> parse_integer_sequence(std::istream& in) {
    std::vector<BigInt> values;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            return;
        try {
            values.emplace_back(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + token + "' in sequence file");
        }
        token.clear();
    };
    char c;
    while (in.get(c)) {
        if (c == ',' || c == '\n' || c == '\r' || c == ' ' || c == '\t')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return values;
}

struct OeisMismatch {
    std::size_t index = 0;
    BigInt expected; // the file's value
    BigInt computed;
};

struct OeisReport {
    std::size_t checked = 0;
    std::vector<OeisMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

inline OeisReport oeis_crosscheck(const std::vector<BigInt>& values) {
    OeisReport rep;
    for (std::size_t n = 0; n < values.size(); ++n) {
        ++rep.checked;
        BigInt z = periodic_count(n);
        if (z != values[n])
            rep.mismatches.push_back({n, values[n], z});
    }
    return rep;
}

// ---- serialization ----

// csv: header row `q,s,r`, one row per q, trailing metadata line.
inline std::string format_census_csv(const CensusTable& t) {
    std::ostringstream out;
    out << "q,s,r\n";
    for (const auto& [q, count] : t.s) {
        auto it = t.r.find(q);
        out << q << ',' << count << ',' << (it == t.r.end() ? 0 : it->second)
            << '\n';
    }
    out << "# anc census v" << kCensusFormatVersion << " n=" << t.length << '\n';
    return out.str();
}

inline CensusTable parse_census_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "q,s,r")
        throw std::invalid_argument("census csv: missing q,s,r header");
    CensusTable t;
    bool saw_meta = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            int version = 0;
            if (std::sscanf(line.c_str(), "# anc census v%d n=%d", &version,
                            &t.length) != 2 ||
                version != kCensusFormatVersion)
                throw std::invalid_argument("census csv: bad metadata line");
            saw_meta = true;
            continue;
        }
        int q = 0;
        unsigned long long s = 0, r = 0;
        if (std::sscanf(line.c_str(), "%d,%llu,%llu", &q, &s, &r) != 3)
            throw std::invalid_argument("census csv: bad row '" + line + "'");
        t.s[q] = s;
        t.r[q] = r;
    }
    if (!saw_meta)
        throw std::invalid_argument("census csv: missing metadata line");
    t.refresh_max();
    return t;
}

// json-lines: one object per q row.
inline std::string format_census_jsonl(const CensusTable& t) {
    std::ostringstream out;
    for (const auto& [q, count] : t.s) {
        auto it = t.r.find(q);
        nlohmann::json row = {{"n", t.length},
                              {"q", q},
                              {"s", count},
                              {"r", it == t.r.end() ? 0 : it->second}};
        out << row.dump() << '\n';
    }
    return out.str();
}

inline CensusTable parse_census_jsonl(const std::string& text) {
    CensusTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        nlohmann::json row = nlohmann::json::parse(line);
        int n = row.at("n").get<int>();
        if (first) {
            t.length = n;
            first = false;
        } else if (n != t.length) {
            throw std::invalid_argument("census jsonl: mixed lengths");
        }
        int q = row.at("q").get<int>();
        t.s[q] = row.at("s").get<std::uint64_t>();
        t.r[q] = row.at("r").get<std::uint64_t>();
    }
    if (first)
        throw std::invalid_argument("census jsonl: empty input");
    t.refresh_max();
    return t;
}

// human-readable table, one row per q
inline std::string format_census_table(const CensusTable& t) {
    std::ostringstream out;
    out << "census n=" << t.length << '\n';
    out << "q\ts_q\tr_q\n";
    for (const auto& [q, count] : t.s) {
        auto it = t.r.find(q);
        out << q << '\t' << count << '\t' << (it == t.r.end() ? 0 : it->second)
            << '\n';
    }
    out << "sum=" << ((t.length >= 64) ? 0 : (1ull << t.length))
        << " max_q=" << t.max_complexity << " max_count=" << t.max_count
        << '\n';
    return out.str();
}

// ---- cache ----

// One csv file per length under a version subdirectory. Writes go to a
// temporary file first and are renamed into place.
inline std::filesystem::path census_cache_path(const std::filesystem::path& dir,
                                               int n) {
    return dir / ("v" + std::to_string(kCensusFormatVersion)) /
           ("census-" + std::to_string(n) + ".csv");
}

inline void save_census(const std::filesystem::path& dir, const CensusTable& t) {
    std::filesystem::path path = census_cache_path(dir, t.length);
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write census cache file " + tmp.string());
        out << format_census_csv(t);
    }
    std::filesystem::rename(tmp, path);
}

inline std::optional<CensusTable> load_census(const std::filesystem::path& dir,
                                              int n) {
    std::filesystem::path path = census_cache_path(dir, n);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        CensusTable t = parse_census_csv(buf.str());
        if (t.length != n)
            return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt; // stale or foreign file: recompute
    }
}

} // namespace anc
