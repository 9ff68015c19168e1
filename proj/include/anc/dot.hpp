#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "anc/nfa.hpp"

namespace anc {

// Graphviz rendering of an automaton. Output is byte-identical for equal
// inputs: states in index order, transitions in sorted order. The initial
// state gets an inbound arrow stub and the accepting state a double circle.
// When a run (visited state sequence) is given, its edges are highlighted.
inline std::string export_dot(const Nfa& m,
                              const std::vector<int>& highlight_run = {}) {
    std::set<std::pair<int, int>> hot;
    for (std::size_t i = 0; i + 1 < highlight_run.size(); ++i)
        hot.insert({highlight_run[i], highlight_run[i + 1]});

    std::ostringstream out;
    out << "digraph nfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=none, label=\"\"];\n";
    for (int s = 0; s < m.state_count; ++s) {
        out << "  q" << s << " [label=\"q" << s << "\"";
        if (s == m.accepting)
            out << ", shape=doublecircle";
        out << "];\n";
    }
    out << "  __start -> q" << m.initial << ";\n";
    for (const Transition& t : m.transitions) {
        out << "  q" << t.from << " -> q" << t.to << " [label=\"" << t.symbol
            << "\"";
        if (hot.count({t.from, t.to}))
            out << ", color=red, penwidth=2";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace anc
