#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oddsym/chevalley.hpp"
#include "oddsym/partitions.hpp"

// Matrix of the quantum multiplication by c1 = (2n+2-k) [X(1)] at q = 1, in
// the Schubert basis, plus the positivity statements driven by it: T is the
// sum of powers c1^0 + ... + c1^dim, and an entry of T is positive exactly
// when the target is reachable from the source within dim steps of the
// arrow-plus-quantum digraph.

namespace oddsym {

struct C1Matrix {
    Shape shape;
    Basis basis;
    WindowPolicy policy = WindowPolicy::standard;
    // entries[i][j]: coefficient of basis[i] in c1 * basis[j] at q = 1.
    std::vector<std::vector<std::int64_t>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

C1Matrix build_c1_matrix(const Shape& shape,
                         WindowPolicy policy = WindowPolicy::standard);

// reach[i][j]: basis[i] has positive coefficient in T * basis[j], i.e. i is
// reachable from j in at most dim steps (paths of length 0 count).
std::vector<std::vector<bool>> reachability_t(const C1Matrix& c1);

// Same positivity pattern evaluated the expensive way: big-integer powers of
// the matrix, summed through exponent dim.
std::vector<std::vector<bool>> exact_t_positivity(const C1Matrix& c1);

struct PathWitness {
    OddPartition from;
    OddPartition to;
    std::vector<OddPartition> path; // endpoints included; empty when absent
    int length() const { return path.empty() ? -1 : static_cast<int>(path.size()) - 1; }
};

struct PositivityReport {
    bool part_a = false; // point class reachable from every basis element
    bool part_b = false; // zero class reachable from the point class
    bool part_c = false; // every basis element reachable from the zero class
    PathWitness witness_a; // worst-case source for (a)
    PathWitness witness_b;
    PathWitness witness_c; // worst-case target for (c)
    bool all() const { return part_a && part_b && part_c; }
};

PositivityReport verify_theorem_positive(const C1Matrix& c1);

struct ConjectureReport {
    bool holds = false;
    // (source, target) pairs whose T entry vanishes.
    std::vector<std::pair<OddPartition, OddPartition>> failing_pairs;
};

ConjectureReport verify_conjecture_t_positive(const C1Matrix& c1);

// Explicit multiplication chains.  Every edge is validated against
// chevalley_mult; a missing edge throws std::logic_error.  Edge coefficients
// are the Chevalley coefficients (2^N for covers, 1 for quantum steps); the
// q-degree counts quantum steps.
struct ChevalleyChain {
    std::vector<OddPartition> vertices;
    std::vector<EdgeKind> edge_kinds;
    std::vector<std::int64_t> edge_coefficients;
    int q_degree = 0;

    int length() const { return static_cast<int>(edge_kinds.size()); }
    std::int64_t coefficient_product() const;
};

// Ascends from lambda to the point class one box at a time, choosing the
// topmost row that admits a box; exactly dim - |lambda| edges.
ChevalleyChain chain_to_point(const Shape& shape, const OddPartition& lambda,
                              WindowPolicy policy = WindowPolicy::standard);

// Descends from the point class to zero: take the quantum step through
// lambda* whenever the first part is maximal, otherwise grow the first row.
// At most k + k(k-1)/2 edges.
ChevalleyChain chain_point_to_zero(const Shape& shape,
                                   WindowPolicy policy = WindowPolicy::standard);

// Ascends from zero to lambda in exactly |lambda| edges.  When lambda has a
// part equal to -1 the route passes through the single-row class of length
// 2n-2k+1 and jumps to (2n+1-k, -1, ..., -1).
ChevalleyChain chain_zero_to(const Shape& shape, const OddPartition& lambda,
                             WindowPolicy policy = WindowPolicy::standard);

// Cycle of length exactly 2n+2-k: grow the first row from zero to maximal,
// then close with the quantum step back to zero.
ChevalleyChain canonical_cycle(const Shape& shape,
                               WindowPolicy policy = WindowPolicy::standard);

struct WindowAudit {
    bool identical = false;
    // (source, target) pairs where the two policies disagree.
    std::vector<std::pair<OddPartition, OddPartition>> differing;
};

WindowAudit audit_window_policies(const Shape& shape);

} // namespace oddsym
