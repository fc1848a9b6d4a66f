#ifndef SSCHUR_STRICT_PARTITION_HPP
#define SSCHUR_STRICT_PARTITION_HPP

#include <functional>
#include <vector>

namespace sschur {

/// Partition into distinct positive parts, stored largest first.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    /// Length parity: 0 for even, 1 for odd.
    int parity() const { return length() % 2; }
    bool contains(int part) const;

    /// Occupied lattice sites of the stone diagram, ascending. These are
    /// exactly the parts.
    std::vector<int> maya() const;
    static StrictPartition from_maya(std::vector<int> occupied);

    bool operator==(const StrictPartition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
};

/// Height function of the shifted diagram: x + 2 * #{i : x < part_i}.
/// Equals x once x >= largest part; takes unit steps along integer x.
long long profile(const StrictPartition& lambda, long long x);

/// Visit every strict partition with size <= max_size exactly once, in
/// nondecreasing size order (deterministic order within each size).
void for_each_strict(long long max_size,
                     const std::function<void(const StrictPartition&)>& visit);

std::vector<StrictPartition> enumerate_strict(long long max_size);

/// counts[n] = number of partitions of n into distinct parts, n = 0..max_size.
std::vector<long long> strict_partition_counts(long long max_size);

} // namespace sschur

#endif
