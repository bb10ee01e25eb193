#include "oddsym/chevalley.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace oddsym {

bool related(const Shape& shape, Box b1, Box b2) {
    int a = shape.axis_column();
    return std::abs(b1.col - a) + b1.row == std::abs(b2.col - a) + b2.row;
}

namespace {

// h[c] = number of rows of the diagram whose length is at least c; rows with
// length >= c always form a prefix, so column c consists of rows 1..h[c].
std::vector<int> column_heights(const std::vector<int>& parts, int width) {
    std::vector<int> h(width + 1, 0);
    for (int part : parts)
        for (int c = 1; c <= std::min(part, width); ++c) ++h[c];
    return h;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

} // namespace

std::optional<int> ev_arrow(const Shape& shape, const EvenPartition& lambda,
                            const EvenPartition& mu, WindowPolicy policy) {
    const int k = shape.k;
    const int strip_bound = shape.n + 1 - k;   // removed boxes live here
    const int axis = shape.axis_column();
    const int width = shape.max_part() + 1;
    const int window_end = policy == WindowPolicy::standard ? width : width - 1;

    assert(lambda.size() == k && mu.size() == k);

    std::vector<Box> removed;
    std::vector<Box> added;
    for (int r = 0; r < k; ++r) {
        int nu = std::min(lambda[r], mu[r]);
        if (lambda[r] - nu > 1) return std::nullopt;    // vertical strip
        if (lambda[r] - nu == 1) {
            if (lambda[r] > strip_bound) return std::nullopt; // confinement
            removed.push_back({r + 1, lambda[r]});
        }
        for (int c = nu + 1; c <= mu[r]; ++c) added.push_back({r + 1, c});
    }

    auto h_lambda = column_heights(lambda.parts(), width);
    auto h_mu = column_heights(mu.parts(), width);
    for (int c = 1; c <= width; ++c) {
        int h_nu = std::min(h_lambda[c], h_mu[c]);
        if (h_mu[c] - h_nu > 1) return std::nullopt;    // horizontal strip
    }

    std::vector<bool> mentioned(added.size(), false);

    // (1) columns up to n+1-k with unchanged positive height: the bottom box
    // may be related to at most one added box; the related box is referenced.
    for (int c = 1; c <= std::min(strip_bound, width); ++c) {
        if (h_lambda[c] != h_mu[c] || h_mu[c] == 0) continue;
        Box bottom{h_mu[c], c};
        int count = 0;
        for (std::size_t i = 0; i < added.size(); ++i) {
            if (related(shape, bottom, added[i])) {
                mentioned[i] = true;
                ++count;
            }
        }
        if (count > 1) return std::nullopt;
    }

    // (2) columns that lost boxes: each removed box and the surviving bottom
    // box must be related to exactly one added box, all matches in one row.
    for (int c = 1; c <= width; ++c) {
        if (h_mu[c] >= h_lambda[c]) continue;
        std::vector<Box> column_boxes;
        for (Box b : removed)
            if (b.col == c) column_boxes.push_back(b);
        if (h_mu[c] > 0) column_boxes.push_back({h_mu[c], c});
        int match_row = -1;
        for (Box b : column_boxes) {
            int count = 0;
            int row = -1;
            for (std::size_t i = 0; i < added.size(); ++i) {
                if (related(shape, b, added[i])) {
                    mentioned[i] = true;
                    ++count;
                    row = added[i].row;
                }
            }
            if (count != 1) return std::nullopt;
            if (match_row == -1) match_row = row;
            else if (match_row != row) return std::nullopt;
        }
    }

    // Unreferenced added boxes inside the window, grouped into components
    // under corner-touching adjacency; components meeting the axis column do
    // not count.
    std::vector<int> pool;
    for (std::size_t i = 0; i < added.size(); ++i)
        if (!mentioned[i] && added[i].col >= axis && added[i].col <= window_end)
            pool.push_back(static_cast<int>(i));

    UnionFind uf(static_cast<int>(pool.size()));
    for (std::size_t x = 0; x < pool.size(); ++x)
        for (std::size_t y = x + 1; y < pool.size(); ++y) {
            Box a = added[pool[x]], b = added[pool[y]];
            if (std::abs(a.row - b.row) <= 1 && std::abs(a.col - b.col) <= 1)
                uf.unite(static_cast<int>(x), static_cast<int>(y));
        }

    std::vector<int> roots;
    std::vector<bool> touches_axis;
    for (std::size_t x = 0; x < pool.size(); ++x) {
        int root = uf.find(static_cast<int>(x));
        auto it = std::find(roots.begin(), roots.end(), root);
        std::size_t slot;
        if (it == roots.end()) {
            roots.push_back(root);
            touches_axis.push_back(false);
            slot = roots.size() - 1;
        } else {
            slot = static_cast<std::size_t>(it - roots.begin());
        }
        if (added[pool[x]].col == axis) touches_axis[slot] = true;
    }

    int n_components = 0;
    for (bool t : touches_axis)
        if (!t) ++n_components;
    return n_components;
}

std::vector<ClassicalTerm> covers(const Shape& shape, const OddPartition& lambda,
                                  WindowPolicy policy) {
    EvenPartition le = to_even(shape, lambda);
    std::vector<ClassicalTerm> out;
    for (const auto& mu : partitions_of_weight(shape, lambda.weight() + 1)) {
        auto n = ev_arrow(shape, le, to_even(shape, mu), policy);
        if (n) out.push_back({mu, *n, std::int64_t{1} << *n});
    }
    return out;
}

std::optional<OddPartition> lambda_star(const Shape& shape, const OddPartition& lambda) {
    const auto& p = lambda.parts();
    if (p.front() != shape.max_part() || p.back() < 0) return std::nullopt;
    std::vector<int> q(p.begin() + 1, p.end());
    q.push_back(0);
    OddPartition result(std::move(q));
    assert(is_valid_odd(shape, result));
    return result;
}

std::optional<OddPartition> lambda_star_star(const Shape& shape, const OddPartition& lambda) {
    const auto& p = lambda.parts();
    if (shape.k < 2 || p[0] != shape.max_part() || p[1] != shape.max_part() - 1)
        return std::nullopt;
    std::vector<int> q;
    q.push_back(p[0]);
    q.insert(q.end(), p.begin() + 2, p.end());
    q.push_back(-1);
    OddPartition result(std::move(q));
    assert(is_valid_odd(shape, result));
    return result;
}

ChevalleyExpansion chevalley_mult(const Shape& shape, const OddPartition& lambda,
                                  WindowPolicy policy) {
    ChevalleyExpansion out;
    out.classical = covers(shape, lambda, policy);
    if (auto s = lambda_star(shape, lambda))
        out.quantum.push_back({std::move(*s), EdgeKind::quantum_star});
    if (auto ss = lambda_star_star(shape, lambda))
        out.quantum.push_back({std::move(*ss), EdgeKind::quantum_star_star});
    return out;
}

} // namespace oddsym
