#include "sschur/strict_partition.hpp"

#include "sschur/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sschur {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw validation_error("StrictPartition: parts must be positive");
        if (i > 0 && parts_[i - 1] <= parts_[i])
            throw validation_error("StrictPartition: parts must be strictly decreasing");
    }
}

long long StrictPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool StrictPartition::contains(int part) const {
    // parts are sorted decreasing
    return std::binary_search(parts_.rbegin(), parts_.rend(), part);
}

std::vector<int> StrictPartition::maya() const {
    std::vector<int> occupied(parts_.rbegin(), parts_.rend());
    return occupied;
}

StrictPartition StrictPartition::from_maya(std::vector<int> occupied) {
    std::sort(occupied.begin(), occupied.end(), std::greater<int>());
    return StrictPartition(std::move(occupied));
}

long long profile(const StrictPartition& lambda, long long x) {
    if (x < 0) throw validation_error("profile: x must be nonnegative");
    long long above = 0;
    for (int part : lambda.parts()) {
        if (x < part)
            ++above;
        else
            break;
    }
    return x + 2 * above;
}

namespace {

// Descend over the largest remaining part, emitting exact-size hits.
// Distinct parts <= k sum to at most k(k+1)/2, which prunes dead branches.
void descend(int max_part, long long remaining, std::vector<int>& acc,
             const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(acc);
        return;
    }
    for (int part = static_cast<int>(std::min<long long>(max_part, remaining)); part >= 1; --part) {
        if (static_cast<long long>(part) * (part + 1) / 2 < remaining) break;
        acc.push_back(part);
        descend(part - 1, remaining - part, acc, emit);
        acc.pop_back();
    }
}

} // namespace

void for_each_strict(long long max_size,
                     const std::function<void(const StrictPartition&)>& visit) {
    if (max_size < 0) throw validation_error("for_each_strict: max_size must be >= 0");
    std::vector<int> acc;
    for (long long n = 0; n <= max_size; ++n)
        descend(static_cast<int>(n), n, acc,
                [&visit](const std::vector<int>& parts) { visit(StrictPartition(parts)); });
}

std::vector<StrictPartition> enumerate_strict(long long max_size) {
    std::vector<StrictPartition> out;
    for_each_strict(max_size, [&out](const StrictPartition& lambda) { out.push_back(lambda); });
    return out;
}

std::vector<long long> strict_partition_counts(long long max_size) {
    // counts[n] after processing parts 1..k = partitions of n into distinct parts <= k
    std::vector<long long> counts(static_cast<std::size_t>(max_size) + 1, 0);
    counts[0] = 1;
    for (long long part = 1; part <= max_size; ++part)
        for (long long n = max_size; n >= part; --n)
            counts[static_cast<std::size_t>(n)] += counts[static_cast<std::size_t>(n - part)];
    return counts;
}

} // namespace sschur
