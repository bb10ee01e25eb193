#pragma once

#include <iosfwd>
#include <vector>

#include "oddsym/c1_operator.hpp"
#include "oddsym/partitions.hpp"

// Digraph on the Schubert basis with an edge lambda -> mu whenever mu has
// positive coefficient in c1 * lambda at q = 1.  Property O for the exact
// path reduces to: the digraph is strongly connected and its period equals
// the Fano index.

namespace oddsym {

struct QuantumBruhatGraph {
    Shape shape;
    Basis basis;
    std::vector<std::vector<int>> out; // out[j]: targets of basis[j], ascending

    int vertex_count() const { return static_cast<int>(out.size()); }
    int edge_count() const;
};

QuantumBruhatGraph build_graph(const C1Matrix& c1);

struct SccPartition {
    int count = 0;
    std::vector<int> component; // component id per vertex
};

// Tarjan with an explicit stack; component ids are assigned in discovery
// order of their roots.
SccPartition strongly_connected_components(const QuantumBruhatGraph& graph);

// True when there is at most one component.  A single vertex without a loop
// is connected by convention; the empty graph vacuously so.
bool strongly_connected(const QuantumBruhatGraph& graph);

// gcd over all edges (u,v) of |level(u) + 1 - level(v)| for BFS levels from
// the root.  Requires a strongly connected graph with at least one edge;
// throws std::invalid_argument otherwise.  The result is root-independent.
int period(const QuantumBruhatGraph& graph);
int period_from_root(const QuantumBruhatGraph& graph, int root);

// Graphviz rendering; vertices are labeled by their tuples, quantum edges
// (weight drop 2n+1-k) are dashed.
void export_dot(const QuantumBruhatGraph& graph, std::ostream& out);

} // namespace oddsym
