#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Index sets for the Schubert basis of the odd symplectic Grassmannian
// IG(k, 2n+1).  Classes [X(lambda)] are indexed by k-tuples lambda that are
// weakly decreasing, (n-k)-strict, bounded by 2n+1-k above and -1 below,
// where a part equal to -1 forces a full first row.  The shifted tuples
// lambda + (1,...,1) index the same classes via Y(lambda + 1^k) and live in
// the analogous (n+1-k)-strict set with parts in [0, 2n+2-k].

namespace oddsym {

struct Shape {
    int k = 0;
    int n = 0;

    int dimension() const { return k * (2 * n + 1 - k) - k * (k - 1) / 2; }
    int fano_index() const { return 2 * n + 2 - k; }
    int max_part() const { return 2 * n + 1 - k; }      // bound for odd parts
    int strictness() const { return n - k; }            // odd tuples are (n-k)-strict
    int axis_column() const { return n + 2 - k; }       // symmetry axis for related boxes
    bool operator==(const Shape&) const = default;
};

// Throws std::invalid_argument unless 1 <= k <= n.  k = n+1 (the Lagrangian
// case, where the quantum Chevalley rule takes a different form) is rejected.
Shape make_shape(int k, int n);

class OddPartition {
public:
    OddPartition() = default;
    explicit OddPartition(std::vector<int> parts) : parts_(std::move(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }
    int weight() const;
    std::string to_string() const;          // "3,-1"

    bool operator==(const OddPartition&) const = default;
    auto operator<=>(const OddPartition&) const = default;

private:
    std::vector<int> parts_;
};

class EvenPartition {
public:
    EvenPartition() = default;
    explicit EvenPartition(std::vector<int> parts) : parts_(std::move(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }
    int weight() const;
    std::string to_string() const;

    bool operator==(const EvenPartition&) const = default;
    auto operator<=>(const EvenPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Membership tests.  A tuple is p-strict when parts strictly decrease while
// they exceed p.  Odd tuples additionally satisfy: parts in [-1, 2n+1-k],
// and last part -1 forces first part 2n+1-k.  Even tuples: parts in
// [0, 2n+2-k], (n+1-k)-strict, last part 0 forces first part 2n+2-k.
bool is_valid_odd(const Shape& shape, const OddPartition& lambda);
bool is_valid_even(const Shape& shape, const EvenPartition& lambda);

// Shift by (1,...,1); to_even and from_even throw std::invalid_argument when
// the input (respectively the shifted result) is not a valid member.
EvenPartition to_even(const Shape& shape, const OddPartition& lambda);
OddPartition from_even(const Shape& shape, const EvenPartition& lambda);

OddPartition zero_partition(const Shape& shape);
// Point class: the unique valid tuple of maximal weight, (2n+1-k, 2n-k, ..., 2n-2k+2).
OddPartition point_partition(const Shape& shape);

// All valid odd tuples of the given weight, lexicographically descending.
std::vector<OddPartition> partitions_of_weight(const Shape& shape, int w);

// Full basis in canonical order: ascending weight, then lexicographically
// descending parts.  Cached index lookups and per-weight buckets.
class Basis {
public:
    static Basis enumerate(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const std::vector<OddPartition>& elements() const { return elements_; }
    const OddPartition& operator[](int i) const { return elements_[i]; }
    int size() const { return static_cast<int>(elements_.size()); }
    std::optional<int> index_of(const OddPartition& lambda) const;
    // Indices of basis elements of weight w (empty when out of range).
    std::vector<int> indices_of_weight(int w) const;

private:
    Shape shape_;
    std::vector<OddPartition> elements_;
    std::vector<std::vector<int>> by_weight_;
};

// Parsing of "3,-1" style comma-separated tuples; throws std::invalid_argument
// on malformed text or length mismatch with the shape.
OddPartition parse_partition(const Shape& shape, const std::string& text);

} // namespace oddsym
