#pragma once

#include <string>
#include <vector>

#include <equivar/rational.hpp>

namespace equivar {

/// Dense row-major matrix over the rationals. Small sizes only (k <= 4 in practice).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> row_major);

    static RationalMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational &operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational &operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    RationalMatrix transpose() const;
    RationalMatrix inverse() const;
    Rational determinant() const;
    int rank() const;

    friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
    friend RationalMatrix operator*(const Rational &s, const RationalMatrix &a);
    friend bool operator==(const RationalMatrix &a, const RationalMatrix &b);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace equivar
