#include <equivar/error.hpp>
#include <equivar/linalg.hpp>

#include <sstream>
#include <utility>

namespace equivar {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols))
{
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major))
{
    if (data_.size() != static_cast<std::size_t>(rows * cols)) {
        fail(Errc::invariant_violation, "matrix data does not match its shape");
    }
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

namespace {

// Row-reduces `m` in place; returns (rank, determinant sign/scale) where the
// determinant is only meaningful for square input.
std::pair<int, Rational> eliminate(RationalMatrix &m, RationalMatrix *companion)
{
    Rational det = 1;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (int j = 0; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(rank, j));
            }
            if (companion) {
                for (int j = 0; j < companion->cols(); ++j) {
                    std::swap((*companion)(pivot, j), (*companion)(rank, j));
                }
            }
            det = -det;
        }
        const Rational p = m(rank, col);
        det *= p;
        for (int j = 0; j < m.cols(); ++j) {
            m(rank, j) /= p;
        }
        if (companion) {
            for (int j = 0; j < companion->cols(); ++j) {
                (*companion)(rank, j) /= p;
            }
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, col) == 0) {
                continue;
            }
            const Rational factor = m(r, col);
            for (int j = 0; j < m.cols(); ++j) {
                m(r, j) -= factor * m(rank, j);
            }
            if (companion) {
                for (int j = 0; j < companion->cols(); ++j) {
                    (*companion)(r, j) -= factor * (*companion)(rank, j);
                }
            }
        }
        ++rank;
    }
    if (rank < m.rows()) {
        det = 0;
    }
    return {rank, det};
}

} // namespace

Rational RationalMatrix::determinant() const
{
    if (rows_ != cols_) {
        fail(Errc::invariant_violation, "determinant of a non-square matrix");
    }
    if (rows_ == 0) {
        return 1;
    }
    RationalMatrix work = *this;
    return eliminate(work, nullptr).second;
}

int RationalMatrix::rank() const
{
    RationalMatrix work = *this;
    return eliminate(work, nullptr).first;
}

RationalMatrix RationalMatrix::inverse() const
{
    if (rows_ != cols_) {
        fail(Errc::invariant_violation, "inverse of a non-square matrix");
    }
    RationalMatrix work = *this;
    RationalMatrix inv = identity(rows_);
    if (eliminate(work, &inv).first != rows_) {
        fail(Errc::invariant_violation, "inverse of a singular matrix");
    }
    return inv;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.cols_ != b.rows_) {
        fail(Errc::invariant_violation, "matrix shapes do not compose");
    }
    RationalMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (int j = 0; j < b.cols_; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

RationalMatrix operator*(const Rational &s, const RationalMatrix &a)
{
    RationalMatrix c = a;
    for (auto &x : c.data_) {
        x *= s;
    }
    return c;
}

bool operator==(const RationalMatrix &a, const RationalMatrix &b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) {
            out << (j ? ", " : "") << (*this)(i, j).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

} // namespace equivar
