#include "legmcs/gf2.hpp"

#include <utility>

namespace legmcs::gf2 {

bool Matrix::is_zero() const
{
    for (auto v : data_)
        if (v)
            return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (at(i, k))
                for (int j = 0; j < other.cols_; ++j)
                    if (other.at(k, j))
                        out.flip(i, j);
    return out;
}

namespace {

// Row-reduce the augmented rows in place; returns pivot columns (one per pivot row).
std::vector<int> eliminate(std::vector<Vector>& rows, int cols)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(rows.size()) && !rows[p][c])
            ++p;
        if (p == static_cast<int>(rows.size()))
            continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[i][c])
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    rows[i][j] ^= rows[r][j];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m)
{
    std::vector<Vector> rows(m.rows(), Vector(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j);
    return static_cast<int>(eliminate(rows, m.cols()).size());
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    const int n = m.cols();
    std::vector<Vector> rows(m.rows(), Vector(n + 1));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            rows[i][j] = m.at(i, j);
        rows[i][n] = b[i] & 1;
    }
    auto pivots = eliminate(rows, n);
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (rows[i][n])
            return std::nullopt;
    Vector x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = rows[i][n];
    return x;
}

}  // namespace legmcs::gf2
