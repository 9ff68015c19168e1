#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anc/lump_tree.hpp"
#include "anc/nfa.hpp"
#include "anc/routes.hpp"
#include "anc/word.hpp"

namespace anc {

// An exact complexity value together with the automaton and run that prove
// it. The witness contains exactly the transitions used by the run, its
// state count equals the complexity, and it has a single accepting walk of
// the word's length.
struct WitnessResult {
    Word word;
    int complexity = 0;
    Nfa witness;
    std::vector<int> run;
};

// The automaton induced by consuming the word along the given run.
inline Nfa induced_nfa(const Word& x, const std::vector<int>& run) {
    if (run.size() != x.length() + 1)
        throw std::invalid_argument("induced_nfa: run must have length |x|+1");
    int states = 1 + *std::max_element(run.begin(), run.end());
    std::vector<Transition> trans;
    for (std::size_t i = 0; i < x.length(); ++i)
        trans.push_back({run[i], x.bit(i), run[i + 1]});
    return Nfa(states, run.front(), run.back(), std::move(trans));
}

namespace detail {

inline constexpr int kMaxSearchLen = 128;
inline constexpr int kMaxSearchStates = kMaxSearchLen + 2;

// Depth-first search over canonical visited-state sequences for one state
// budget. Candidate next states follow the tree-of-cycles rules: reuse an
// existing edge with the right label, open a fresh state, or return to a
// visited state outside every lump (which closes a new lump). A branch is
// abandoned as soon as two distinct walks of equal length reach the current
// state, and a completed run is accepted only after an exact walk-count
// check over the finished automaton.
class LevelSearch {
public:
    bool run(const std::uint8_t* bits, int n, int q, std::vector<int>& out) {
        bits_ = bits;
        n_ = n;
        q_ = q;
        for (int a = 0; a < q_; ++a) {
            in_cnt_[a] = 0;
            std::fill(label_[a].begin(), label_[a].begin() + q_, int8_t{-1});
        }
        in_lump_.reset();
        max_state_ = 0;
        first_pos_[0] = 0;
        run_[0] = 0;
        counts_[0].fill(0);
        counts_[0][0] = 1;
        if (!dfs(0))
            return false;
        out.assign(run_.begin(), run_.begin() + n_ + 1);
        return true;
    }

private:
    using Mask = std::bitset<kMaxSearchStates>;

    // Fresh states are tried before revisits: the first witness found then
    // prefers one long cycle over several short ones, which keeps the
    // returned automaton inside the shapes that survive at every length.
    bool dfs(int depth) {
        if (depth == n_)
            return unique_on_final_edges();
        int s = run_[depth];
        int b = bits_[depth];
        int steps_left = n_ - depth - 1;

        int fresh = max_state_ + 1;
        if (fresh < q_) {
            add_edge(s, b, fresh);
            first_pos_[fresh] = depth + 1;
            max_state_ = fresh;
            if (advance(depth, fresh))
                return true;
            max_state_ = fresh - 1;
            remove_edge(s, fresh);
        }
        if ((q_ - 1) - max_state_ > steps_left)
            return false; // the remaining steps cannot reach q states
        for (int t = 0; t <= max_state_; ++t) {
            int lbl = label_[s][t];
            if (lbl == b) {
                if (advance(depth, t))
                    return true;
            } else if (lbl < 0 && !in_lump_[t]) {
                // new edge closing a cycle at t
                Mask saved = in_lump_;
                add_edge(s, b, t);
                for (int j = first_pos_[t]; j <= depth; ++j)
                    in_lump_.set(run_[j]);
                if (advance(depth, t))
                    return true;
                remove_edge(s, t);
                in_lump_ = saved;
            }
        }
        return false;
    }

    bool advance(int depth, int t) {
        auto& next = counts_[depth + 1];
        for (int v = 0; v <= max_state_; ++v) {
            int c = 0;
            for (int k = 0; k < in_cnt_[v]; ++k)
                c += counts_[depth][in_src_[v][k]];
            next[v] = static_cast<std::uint8_t>(std::min(c, 2));
        }
        if (next[t] >= 2)
            return false; // already two walks reach this state in step
        run_[depth + 1] = static_cast<std::uint8_t>(t);
        return dfs(depth + 1);
    }

    // Walk counts along the way are lower bounds (edges added later are not
    // folded back into earlier levels), so the accepted run is re-checked
    // against the complete transition set.
    bool unique_on_final_edges() {
        std::array<std::uint8_t, kMaxSearchStates> cur{}, nxt{};
        cur[0] = 1;
        for (int i = 0; i < n_; ++i) {
            for (int v = 0; v <= max_state_; ++v) {
                int c = 0;
                for (int k = 0; k < in_cnt_[v]; ++k)
                    c += cur[in_src_[v][k]];
                nxt[v] = static_cast<std::uint8_t>(std::min(c, 2));
            }
            std::copy(nxt.begin(), nxt.begin() + max_state_ + 1, cur.begin());
        }
        return cur[run_[n_]] == 1;
    }

    void add_edge(int from, int symbol, int to) {
        label_[from][to] = static_cast<int8_t>(symbol);
        in_src_[to][in_cnt_[to]++] = static_cast<std::uint8_t>(from);
    }

    void remove_edge(int from, int to) {
        label_[from][to] = -1;
        --in_cnt_[to];
    }

    const std::uint8_t* bits_ = nullptr;
    int n_ = 0;
    int q_ = 0;
    int max_state_ = 0;
    std::array<std::array<int8_t, kMaxSearchStates>, kMaxSearchStates> label_;
    std::array<std::array<std::uint8_t, kMaxSearchStates>, kMaxSearchStates> in_src_;
    std::array<std::uint8_t, kMaxSearchStates> in_cnt_{};
    std::array<int, kMaxSearchStates> first_pos_{};
    std::array<std::uint8_t, kMaxSearchLen + 1> run_{};
    std::array<std::array<std::uint8_t, kMaxSearchStates>, kMaxSearchLen + 1> counts_;
    Mask in_lump_;
};

} // namespace detail

struct SearchOptions {
    std::optional<int> upper_bound;
    // Cap the deepening at floor(n/2)+1 instead of the n+1 chain bound.
    bool half_length_cap = false;
};

// Reusable searcher; the buffers are large, so create one per thread and
// keep it across calls.
class ComplexitySearcher {
public:
    ComplexitySearcher() : level_(std::make_unique<detail::LevelSearch>()) {}

    WitnessResult complexity(const Word& x, SearchOptions opts = {}) {
        int n = static_cast<int>(x.length());
        if (n > detail::kMaxSearchLen)
            throw std::invalid_argument("complexity: word longer than supported search length");
        if (n == 0)
            return {x, 1, Nfa(1, 0, 0, {}), {0}};

        std::array<std::uint8_t, detail::kMaxSearchLen> bits{};
        for (int i = 0; i < n; ++i)
            bits[i] = static_cast<std::uint8_t>(x.bit(i));

        int chain = n + 1;
        int cap = opts.half_length_cap ? n / 2 + 1 : chain;
        if (opts.upper_bound)
            cap = std::min(cap, *opts.upper_bound);

        std::vector<int> run;
        for (int q = 1; q <= cap; ++q) {
            if (level_->run(bits.data(), n, q, run))
                return {x, q, induced_nfa(x, run), run};
        }
        throw std::runtime_error("complexity: no witness within the given state bound");
    }

private:
    std::unique_ptr<detail::LevelSearch> level_;
};

inline WitnessResult complexity(const Word& x, SearchOptions opts = {}) {
    ComplexitySearcher searcher;
    return searcher.complexity(x, opts);
}

// Structural summary of a witness: its alternate routes (one per attached
// cycle or parallel path), whether the run admits the tree-of-cycles
// decomposition, and whether any route pair forms two independently
// repeatable cycles (which would contradict unique acceptance at the witness
// length for long words).
struct StructureReport {
    RouteAnalysis routes;
    std::size_t minimal_detours = 0;
    bool lump_tree_ok = false;
    bool category3_free = true;
};

inline StructureReport classify_structure(const WitnessResult& w) {
    StructureReport rep;
    rep.routes = find_alternate_routes(w.witness);
    rep.minimal_detours = rep.routes.routes.size();
    try {
        build_lump_tree(w.run);
        rep.lump_tree_ok = true;
    } catch (const LumpRuleViolation&) {
        rep.lump_tree_ok = false;
    }
    for (const RoutePair& p : rep.routes.pairs)
        if (p.category == 3)
            rep.category3_free = false;
    return rep;
}

} // namespace anc
