#include "oddsym/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace oddsym {

Shape make_shape(int k, int n) {
    if (k < 1)
        throw std::invalid_argument("shape: k must be at least 1");
    if (n < 1)
        throw std::invalid_argument("shape: n must be at least 1");
    if (k == n + 1)
        throw std::invalid_argument("shape: k = n+1 (Lagrangian case) is not supported");
    if (k > n)
        throw std::invalid_argument("shape: k must not exceed n");
    return Shape{k, n};
}

namespace {

int sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    return out.str();
}

// Weakly decreasing, strictly while above the threshold p.
bool is_p_strict(const std::vector<int>& v, int p) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) return false;
        if (v[i] > p && v[i] == v[i + 1]) return false;
    }
    return true;
}

} // namespace

int OddPartition::weight() const { return sum(parts_); }
int EvenPartition::weight() const { return sum(parts_); }
std::string OddPartition::to_string() const { return join(parts_); }
std::string EvenPartition::to_string() const { return join(parts_); }

bool is_valid_odd(const Shape& shape, const OddPartition& lambda) {
    const auto& p = lambda.parts();
    if (static_cast<int>(p.size()) != shape.k) return false;
    for (int x : p)
        if (x < -1 || x > shape.max_part()) return false;
    if (!is_p_strict(p, shape.strictness())) return false;
    if (p.back() == -1 && p.front() != shape.max_part()) return false;
    return true;
}

bool is_valid_even(const Shape& shape, const EvenPartition& lambda) {
    const auto& p = lambda.parts();
    if (static_cast<int>(p.size()) != shape.k) return false;
    for (int x : p)
        if (x < 0 || x > shape.max_part() + 1) return false;
    if (!is_p_strict(p, shape.strictness() + 1)) return false;
    if (p.back() == 0 && p.front() != shape.max_part() + 1) return false;
    return true;
}

EvenPartition to_even(const Shape& shape, const OddPartition& lambda) {
    if (!is_valid_odd(shape, lambda))
        throw std::invalid_argument("to_even: not a valid tuple for IG(" +
                                    std::to_string(shape.k) + "," +
                                    std::to_string(2 * shape.n + 1) + "): " +
                                    lambda.to_string());
    std::vector<int> q = lambda.parts();
    for (int& x : q) ++x;
    return EvenPartition(std::move(q));
}

OddPartition from_even(const Shape& shape, const EvenPartition& lambda) {
    std::vector<int> q = lambda.parts();
    for (int& x : q) --x;
    OddPartition result(std::move(q));
    if (!is_valid_even(shape, lambda) || !is_valid_odd(shape, result))
        throw std::invalid_argument("from_even: shifted tuple is not a valid member: " +
                                    lambda.to_string());
    return result;
}

OddPartition zero_partition(const Shape& shape) {
    return OddPartition(std::vector<int>(shape.k, 0));
}

OddPartition point_partition(const Shape& shape) {
    std::vector<int> p(shape.k);
    for (int i = 0; i < shape.k; ++i) p[i] = shape.max_part() - i;
    return OddPartition(std::move(p));
}

namespace {

// Depth-first generation in lexicographically descending order.  At each row
// the next part ranges downward from the largest value allowed by strictness;
// remaining-weight bounds prune the search.
void generate(const Shape& shape, int row, int prev, int remaining,
              std::vector<int>& acc, std::vector<OddPartition>& out) {
    const int k = shape.k;
    if (row == k) {
        if (remaining != 0) return;
        OddPartition candidate(acc);
        if (is_valid_odd(shape, candidate)) out.push_back(std::move(candidate));
        return;
    }
    int hi = prev > shape.strictness() ? prev - 1 : prev;
    hi = std::min(hi, remaining + (k - 1 - row)); // rows below may contribute -1 each
    for (int x = hi; x >= -1; --x) {
        // Upper bound on what rows below x can still contribute: strict decrease
        // is not modeled here, x per row suffices for pruning.
        if (remaining - x > (k - 1 - row) * std::max(x, 0)) break;
        acc.push_back(x);
        generate(shape, row + 1, x, remaining - x, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<OddPartition> partitions_of_weight(const Shape& shape, int w) {
    std::vector<OddPartition> out;
    if (w < 0 || w > shape.dimension()) return out;
    std::vector<int> acc;
    generate(shape, 0, shape.max_part() + 1, w, acc, out);
    return out;
}

Basis Basis::enumerate(const Shape& shape) {
    Basis b;
    b.shape_ = shape;
    b.by_weight_.resize(shape.dimension() + 1);
    for (int w = 0; w <= shape.dimension(); ++w) {
        for (auto& lambda : partitions_of_weight(shape, w)) {
            b.by_weight_[w].push_back(static_cast<int>(b.elements_.size()));
            b.elements_.push_back(std::move(lambda));
        }
    }
    return b;
}

std::optional<int> Basis::index_of(const OddPartition& lambda) const {
    int w = lambda.weight();
    if (w < 0 || w >= static_cast<int>(by_weight_.size())) return std::nullopt;
    for (int i : by_weight_[w])
        if (elements_[i] == lambda) return i;
    return std::nullopt;
}

std::vector<int> Basis::indices_of_weight(int w) const {
    if (w < 0 || w >= static_cast<int>(by_weight_.size())) return {};
    return by_weight_[w];
}

OddPartition parse_partition(const Shape& shape, const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        // Trim surrounding blanks.
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t z = token.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("partition: empty component in '" + text + "'");
        token = token.substr(a, z - a + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("partition: bad integer '" + token + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(parts.size()) != shape.k)
        throw std::invalid_argument("partition: expected " + std::to_string(shape.k) +
                                    " parts, got " + std::to_string(parts.size()));
    OddPartition lambda(std::move(parts));
    if (!is_valid_odd(shape, lambda))
        throw std::invalid_argument("partition: " + lambda.to_string() +
                                    " is not a valid tuple for this shape");
    return lambda;
}

} // namespace oddsym
