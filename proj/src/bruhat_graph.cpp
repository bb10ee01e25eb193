#include "oddsym/bruhat_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace oddsym {

int QuantumBruhatGraph::edge_count() const {
    int total = 0;
    for (const auto& targets : out) total += static_cast<int>(targets.size());
    return total;
}

QuantumBruhatGraph build_graph(const C1Matrix& c1) {
    QuantumBruhatGraph graph{c1.shape, c1.basis, {}};
    graph.out.resize(c1.size());
    for (int j = 0; j < c1.size(); ++j)
        for (int i = 0; i < c1.size(); ++i)
            if (c1.entries[i][j] > 0) graph.out[j].push_back(i);
    return graph;
}

SccPartition strongly_connected_components(const QuantumBruhatGraph& graph) {
    const int n = graph.vertex_count();
    SccPartition result;
    result.component.assign(n, -1);

    std::vector<int> index(n, -1), lowlink(n, 0), edge_pos(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack, call;
    int next_index = 0;

    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        call.push_back(start);
        while (!call.empty()) {
            int v = call.back();
            if (index[v] == -1) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (edge_pos[v] < static_cast<int>(graph.out[v].size())) {
                int w = graph.out[v][edge_pos[v]++];
                if (index[w] == -1) {
                    call.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                int id = result.count++;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    result.component[w] = id;
                } while (w != v);
            }
            call.pop_back();
            if (!call.empty()) {
                int parent = call.back();
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return result;
}

bool strongly_connected(const QuantumBruhatGraph& graph) {
    return strongly_connected_components(graph).count <= 1;
}

int period_from_root(const QuantumBruhatGraph& graph, int root) {
    const int n = graph.vertex_count();
    std::vector<int> level(n, -1);
    std::deque<int> queue{root};
    level[root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : graph.out[u])
            if (level[v] == -1) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
    }
    int g = 0;
    for (int u = 0; u < n; ++u) {
        if (level[u] == -1) continue;
        for (int v : graph.out[u])
            if (level[v] != -1) g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
    }
    return g;
}

int period(const QuantumBruhatGraph& graph) {
    if (!strongly_connected(graph) || graph.vertex_count() == 0)
        throw std::invalid_argument("period: graph is not strongly connected");
    int g = period_from_root(graph, 0);
    if (g == 0) throw std::invalid_argument("period: graph has no cycle");
    return g;
}

void export_dot(const QuantumBruhatGraph& graph, std::ostream& out) {
    out << "digraph quantum_bruhat {\n";
    for (int v = 0; v < graph.vertex_count(); ++v)
        out << "  \"" << graph.basis[v].to_string() << "\";\n";
    for (int u = 0; u < graph.vertex_count(); ++u)
        for (int v : graph.out[u]) {
            bool quantum =
                graph.basis[v].weight() == graph.basis[u].weight() - graph.shape.max_part();
            out << "  \"" << graph.basis[u].to_string() << "\" -> \""
                << graph.basis[v].to_string() << "\"";
            if (quantum) out << " [style=dashed, color=blue]";
            out << ";\n";
        }
    out << "}\n";
}

} // namespace oddsym
