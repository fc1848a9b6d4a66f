#ifndef SSCHUR_DENSE_HPP
#define SSCHUR_DENSE_HPP

#include <cstddef>
#include <vector>

namespace sschur {

// Minimal dense row-major matrix; just enough linear algebra for the
// small systems that show up here (Taylor solves, Fredholm determinants,
// determinant cross-checks).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Determinant by partially pivoted LU; returns 0 for singular input.
double determinant(Matrix a);

// Solve a*x = b by partially pivoted LU. Throws validation_error when the
// matrix is numerically singular.
std::vector<double> solve(Matrix a, std::vector<double> b);

} // namespace sschur

#endif
