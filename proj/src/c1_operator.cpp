#include "oddsym/c1_operator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddsym {

C1Matrix build_c1_matrix(const Shape& shape, WindowPolicy policy) {
    C1Matrix m{shape, Basis::enumerate(shape), policy, {}};
    const int size = m.basis.size();
    const std::int64_t r = shape.fano_index();
    m.entries.assign(size, std::vector<std::int64_t>(size, 0));
    for (int j = 0; j < size; ++j) {
        auto expansion = chevalley_mult(shape, m.basis[j], policy);
        for (const auto& term : expansion.classical) {
            auto i = m.basis.index_of(term.mu);
            if (!i) throw std::logic_error("cover target outside basis: " + term.mu.to_string());
            m.entries[*i][j] += r * term.coefficient;
        }
        for (const auto& term : expansion.quantum) {
            auto i = m.basis.index_of(term.mu);
            if (!i) throw std::logic_error("quantum target outside basis: " + term.mu.to_string());
            m.entries[*i][j] += r;
        }
    }
    return m;
}

namespace {

std::vector<std::vector<int>> out_adjacency(const C1Matrix& c1) {
    std::vector<std::vector<int>> out(c1.size());
    for (int j = 0; j < c1.size(); ++j)
        for (int i = 0; i < c1.size(); ++i)
            if (c1.entries[i][j] > 0) out[j].push_back(i);
    return out;
}

// BFS distances from source, -1 when unreachable.
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::vector<int> bfs_parents(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> parent(adj.size(), -1), dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
    }
    return parent;
}

std::vector<std::vector<int>> reversed(const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<int>> rev(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) rev[v].push_back(static_cast<int>(u));
    return rev;
}

// Path source -> target read off forward-BFS parents.
std::vector<OddPartition> path_from_parents(const Basis& basis,
                                            const std::vector<int>& parent,
                                            int source, int target) {
    std::vector<int> ids{target};
    while (ids.back() != source) {
        int p = parent[ids.back()];
        if (p == -1) return {};
        ids.push_back(p);
    }
    std::vector<OddPartition> path;
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) path.push_back(basis[*it]);
    return path;
}

} // namespace

std::vector<std::vector<bool>> reachability_t(const C1Matrix& c1) {
    auto adj = out_adjacency(c1);
    const int size = c1.size();
    const int cap = c1.shape.dimension();
    std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
    for (int j = 0; j < size; ++j) {
        auto dist = bfs(adj, j);
        for (int i = 0; i < size; ++i)
            if (dist[i] >= 0 && dist[i] <= cap) reach[i][j] = true;
    }
    return reach;
}

std::vector<std::vector<bool>> exact_t_positivity(const C1Matrix& c1) {
    using boost::multiprecision::cpp_int;
    const int size = c1.size();
    std::vector<std::vector<cpp_int>> power(size, std::vector<cpp_int>(size, 0));
    std::vector<std::vector<cpp_int>> total(size, std::vector<cpp_int>(size, 0));
    for (int i = 0; i < size; ++i) power[i][i] = 1;
    for (int i = 0; i < size; ++i) total[i][i] = 1;
    for (int step = 1; step <= c1.shape.dimension(); ++step) {
        std::vector<std::vector<cpp_int>> next(size, std::vector<cpp_int>(size, 0));
        for (int i = 0; i < size; ++i)
            for (int l = 0; l < size; ++l) {
                if (c1.entries[i][l] == 0) continue;
                for (int j = 0; j < size; ++j) {
                    if (power[l][j] == 0) continue;
                    next[i][j] += c1.entries[i][l] * power[l][j];
                }
            }
        power = std::move(next);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) total[i][j] += power[i][j];
    }
    std::vector<std::vector<bool>> positive(size, std::vector<bool>(size, false));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) positive[i][j] = total[i][j] > 0;
    return positive;
}

PositivityReport verify_theorem_positive(const C1Matrix& c1) {
    auto adj = out_adjacency(c1);
    const auto& basis = c1.basis;
    const int cap = c1.shape.dimension();
    const int point = *basis.index_of(point_partition(c1.shape));
    const int zero = *basis.index_of(zero_partition(c1.shape));

    PositivityReport report;

    // (a) distances into the point class, computed on the reversed digraph;
    // the witness is a worst-case source.
    auto rev = reversed(adj);
    auto dist_to_point = bfs(rev, point);
    int worst_a = point;
    report.part_a = true;
    for (int j = 0; j < basis.size(); ++j) {
        if (dist_to_point[j] < 0 || dist_to_point[j] > cap) report.part_a = false;
        if (dist_to_point[j] > dist_to_point[worst_a]) worst_a = j;
    }
    {
        auto parent = bfs_parents(adj, worst_a);
        report.witness_a = {basis[worst_a], basis[point],
                            path_from_parents(basis, parent, worst_a, point)};
    }

    // (b) zero reachable from the point class.
    auto parent_from_point = bfs_parents(adj, point);
    auto dist_from_point = bfs(adj, point);
    report.part_b = dist_from_point[zero] >= 0 && dist_from_point[zero] <= cap;
    report.witness_b = {basis[point], basis[zero],
                        path_from_parents(basis, parent_from_point, point, zero)};

    // (c) everything reachable from the zero class; worst-case target.
    auto dist_from_zero = bfs(adj, zero);
    auto parent_from_zero = bfs_parents(adj, zero);
    int worst_c = zero;
    report.part_c = true;
    for (int i = 0; i < basis.size(); ++i) {
        if (dist_from_zero[i] < 0 || dist_from_zero[i] > cap) report.part_c = false;
        if (dist_from_zero[i] > dist_from_zero[worst_c]) worst_c = i;
    }
    report.witness_c = {basis[zero], basis[worst_c],
                        path_from_parents(basis, parent_from_zero, zero, worst_c)};
    return report;
}

ConjectureReport verify_conjecture_t_positive(const C1Matrix& c1) {
    auto reach = reachability_t(c1);
    ConjectureReport report;
    report.holds = true;
    for (int j = 0; j < c1.size(); ++j)
        for (int i = 0; i < c1.size(); ++i)
            if (!reach[i][j]) {
                report.holds = false;
                report.failing_pairs.emplace_back(c1.basis[j], c1.basis[i]);
            }
    return report;
}

std::int64_t ChevalleyChain::coefficient_product() const {
    std::int64_t product = 1;
    for (auto c : edge_coefficients) product *= c;
    return product;
}

namespace {

// Appends the validated edge cur -> next and returns next.
OddPartition push_edge(const Shape& shape, WindowPolicy policy, ChevalleyChain& chain,
                       const OddPartition& cur, const OddPartition& next) {
    auto expansion = chevalley_mult(shape, cur, policy);
    for (const auto& term : expansion.classical)
        if (term.mu == next) {
            chain.vertices.push_back(next);
            chain.edge_kinds.push_back(EdgeKind::cover);
            chain.edge_coefficients.push_back(term.coefficient);
            return next;
        }
    for (const auto& term : expansion.quantum)
        if (term.mu == next) {
            chain.vertices.push_back(next);
            chain.edge_kinds.push_back(term.kind);
            chain.edge_coefficients.push_back(1);
            chain.q_degree += 1;
            return next;
        }
    throw std::logic_error("chain edge is not in the Chevalley expansion: " +
                           cur.to_string() + " -> " + next.to_string());
}

// Topmost row where one more box keeps the tuple valid.
std::optional<OddPartition> add_one_box(const Shape& shape, const OddPartition& lambda) {
    for (int i = 0; i < shape.k; ++i) {
        std::vector<int> parts = lambda.parts();
        parts[i] += 1;
        OddPartition candidate(std::move(parts));
        if (is_valid_odd(shape, candidate)) return candidate;
    }
    return std::nullopt;
}

} // namespace

ChevalleyChain chain_to_point(const Shape& shape, const OddPartition& lambda,
                              WindowPolicy policy) {
    if (!is_valid_odd(shape, lambda))
        throw std::invalid_argument("chain_to_point: invalid tuple " + lambda.to_string());
    const OddPartition point = point_partition(shape);
    ChevalleyChain chain;
    chain.vertices.push_back(lambda);
    OddPartition cur = lambda;
    while (cur != point) {
        auto next = add_one_box(shape, cur);
        if (!next)
            throw std::logic_error("chain_to_point: no admissible box at " + cur.to_string());
        cur = push_edge(shape, policy, chain, cur, *next);
    }
    return chain;
}

ChevalleyChain chain_point_to_zero(const Shape& shape, WindowPolicy policy) {
    const OddPartition zero = zero_partition(shape);
    const int bound = shape.k + shape.k * (shape.k - 1) / 2;
    ChevalleyChain chain;
    OddPartition cur = point_partition(shape);
    chain.vertices.push_back(cur);
    while (cur != zero) {
        if (chain.length() >= bound)
            throw std::logic_error("chain_point_to_zero: exceeded edge bound at " +
                                   cur.to_string());
        if (cur[0] == shape.max_part()) {
            auto star = lambda_star(shape, cur);
            if (!star)
                throw std::logic_error("chain_point_to_zero: quantum step undefined at " +
                                       cur.to_string());
            cur = push_edge(shape, policy, chain, cur, *star);
        } else {
            std::vector<int> parts = cur.parts();
            parts[0] += 1;
            cur = push_edge(shape, policy, chain, cur, OddPartition(std::move(parts)));
        }
    }
    return chain;
}

ChevalleyChain chain_zero_to(const Shape& shape, const OddPartition& lambda,
                             WindowPolicy policy) {
    if (!is_valid_odd(shape, lambda))
        throw std::invalid_argument("chain_zero_to: invalid tuple " + lambda.to_string());
    ChevalleyChain chain;
    OddPartition cur = zero_partition(shape);
    chain.vertices.push_back(cur);

    auto grow_row = [&](int row, int target) {
        while (cur[row] < target) {
            std::vector<int> parts = cur.parts();
            parts[row] += 1;
            cur = push_edge(shape, policy, chain, cur, OddPartition(std::move(parts)));
        }
    };

    if (lambda.parts().back() >= 0) {
        for (int i = 0; i < shape.k; ++i) grow_row(i, lambda[i]);
        return chain;
    }

    // Tuples with a -1 part are reached through the dominating jump: grow a
    // single row one past the strictness threshold 2n-2k+1, step to
    // (2n+1-k, -1, ..., -1), then fill the remaining rows.
    grow_row(0, 2 * shape.n - 2 * shape.k + 1);
    std::vector<int> alpha(shape.k, -1);
    alpha[0] = shape.max_part();
    cur = push_edge(shape, policy, chain, cur, OddPartition(std::move(alpha)));
    for (int i = 1; i < shape.k; ++i) grow_row(i, lambda[i]);
    return chain;
}

ChevalleyChain canonical_cycle(const Shape& shape, WindowPolicy policy) {
    ChevalleyChain chain;
    OddPartition cur = zero_partition(shape);
    chain.vertices.push_back(cur);
    for (int t = 1; t <= shape.max_part(); ++t) {
        std::vector<int> parts = cur.parts();
        parts[0] += 1;
        cur = push_edge(shape, policy, chain, cur, OddPartition(std::move(parts)));
    }
    auto star = lambda_star(shape, cur);
    if (!star)
        throw std::logic_error("canonical_cycle: quantum step undefined at " + cur.to_string());
    push_edge(shape, policy, chain, cur, *star);
    return chain;
}

WindowAudit audit_window_policies(const Shape& shape) {
    C1Matrix standard = build_c1_matrix(shape, WindowPolicy::standard);
    C1Matrix truncated = build_c1_matrix(shape, WindowPolicy::truncated);
    WindowAudit audit;
    audit.identical = true;
    for (int j = 0; j < standard.size(); ++j)
        for (int i = 0; i < standard.size(); ++i)
            if (standard.entries[i][j] != truncated.entries[i][j]) {
                audit.identical = false;
                audit.differing.emplace_back(standard.basis[j], standard.basis[i]);
            }
    return audit;
}

} // namespace oddsym
