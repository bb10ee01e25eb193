#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "oddsym/partitions.hpp"

// Quantum Chevalley rule for IG(k, 2n+1):
//
//   [X(1)] * [X(lambda)] = sum over arrows lambda -> mu, |mu| = |lambda| + 1,
//                          of 2^{A(lambda,mu)} [X(mu)]
//                          + q [X(lambda*)] + q [X(lambda**)]
//
// with quantum terms present only when lambda* / lambda** exist.  Arrows and
// the exponent A are computed on the shifted diagrams (lambda + 1^k).

namespace oddsym {

struct Box {
    int row = 0; // 1-based
    int col = 0; // 1-based
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// Boxes (r,c) and (r',c') are related when |c - a| + r = |c' - a| + r' for
// the axis column a = n+2-k.
bool related(const Shape& shape, Box b1, Box b2);

// Column range scanned for unreferenced added boxes when counting components:
// both start at the axis column; `standard` extends through the full even
// diagram width 2n+2-k, `truncated` stops one column short at 2n+1-k.
enum class WindowPolicy { standard, truncated };

// Arrow test on shifted diagrams.  Returns the component count N(lambda,mu)
// when lambda ->ev mu, std::nullopt otherwise.  The test decomposes the step
// through nu = lambda /\ mu (columnwise minimum):
//   - lambda \ nu must be a vertical strip inside columns <= n+1-k,
//   - mu \ nu must be a horizontal strip,
//   - (1) in each of the first n+1-k columns where lambda and mu agree with
//     positive height, the bottom box is related to at most one added box,
//   - (2) in each column that lost boxes, every removed box and the bottom
//     box of mu there is related to exactly one added box, and those added
//     boxes lie in a single row.
// N counts components (under corner-touching adjacency) of the added boxes
// inside the window that were referenced by neither (1) nor (2), skipping
// components that meet the axis column.
std::optional<int> ev_arrow(const Shape& shape, const EvenPartition& lambda,
                            const EvenPartition& mu,
                            WindowPolicy policy = WindowPolicy::standard);

struct ClassicalTerm {
    OddPartition mu;
    int a = 0;                 // component count N
    std::int64_t coefficient = 1; // 2^a
    bool operator==(const ClassicalTerm&) const = default;
};

// All mu with |mu| = |lambda| + 1 and lambda -> mu, in canonical order.
std::vector<ClassicalTerm> covers(const Shape& shape, const OddPartition& lambda,
                                  WindowPolicy policy = WindowPolicy::standard);

// lambda*: defined when lambda_1 = 2n+1-k and lambda_k >= 0, drops the first
// row and appends 0.  lambda**: defined when lambda_1 = 2n+1-k and
// lambda_2 = 2n-k, drops the second row and appends -1.  Both lower the
// weight by 2n+1-k.
std::optional<OddPartition> lambda_star(const Shape& shape, const OddPartition& lambda);
std::optional<OddPartition> lambda_star_star(const Shape& shape, const OddPartition& lambda);

enum class EdgeKind { cover, quantum_star, quantum_star_star };

struct QuantumTerm {
    OddPartition mu;
    EdgeKind kind = EdgeKind::quantum_star; // coefficient 1, q-exponent 1
    bool operator==(const QuantumTerm&) const = default;
};

struct ChevalleyExpansion {
    std::vector<ClassicalTerm> classical;
    std::vector<QuantumTerm> quantum;
    bool operator==(const ChevalleyExpansion&) const = default;
};

ChevalleyExpansion chevalley_mult(const Shape& shape, const OddPartition& lambda,
                                  WindowPolicy policy = WindowPolicy::standard);

} // namespace oddsym
