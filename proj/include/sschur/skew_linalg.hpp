#ifndef SSCHUR_SKEW_LINALG_HPP
#define SSCHUR_SKEW_LINALG_HPP

#include "sschur/fermion_kernel.hpp"

#include <vector>

namespace sschur {

/// Dense real skew-symmetric matrix of even order (possibly 0). Writes go
/// through set_upper, which mirrors the negated value below the diagonal.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(int order);

    int order() const { return order_; }
    double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    void set_upper(int i, int j, double value);

private:
    int order_ = 0;
    std::vector<double> data_;
};

/// Pfaffian by Parlett-Reid tridiagonalisation with complete pivoting.
/// Pf of the empty matrix is 1; structurally singular input gives 0.
double pfaffian(SkewMatrix m);

/// Correlation matrix for a set of distinct positive sites: 2N x 2N blocks
/// of kernel values with the sign conventions of the doubled one-particle
/// space. Sites are sorted decreasingly before filling.
SkewMatrix correlation_matrix(std::vector<int> sites, const JTable& table);

struct CorrelationResult {
    double value = 0.0;
    double bound = 0.0; // propagated kernel truncation bound
};

/// Probability that all given sites are occupied: Pf of the correlation
/// matrix. The empty set gives 1.
CorrelationResult correlation(std::vector<int> sites, const JTable& table);
CorrelationResult correlation(std::vector<int> sites, const MiwaParams& params);

/// Probability that no site of the set is occupied.
/// Alternating sum of correlations over subsets; exact but exponential,
/// guarded at |sites| <= 20.
double gap_probability_inclusion_exclusion(const std::vector<int>& sites, const JTable& table);
/// Single Pfaffian of the doubled-space matrix, order 2|sites| (<= 1200).
double gap_probability_block_pfaffian(const std::vector<int>& sites, const JTable& table);
/// Dispatches to inclusion-exclusion for small sets, block Pfaffian above.
double gap_probability(const std::vector<int>& sites, const JTable& table);
double gap_probability(const std::vector<int>& sites, const MiwaParams& params);

} // namespace sschur

#endif
