#pragma once

// Dense linear algebra over Z/2. Sizes here are desk-scale (tens of rows), so
// rows are plain byte vectors.

#include <cstdint>
#include <optional>
#include <vector>

namespace legmcs::gf2 {

using Vector = std::vector<std::uint8_t>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint8_t v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v & 1; }
    void flip(int r, int c) { data_[static_cast<std::size_t>(r) * cols_ + c] ^= 1; }

    bool is_zero() const;
    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

int rank(Matrix m);

// Some x with M x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace legmcs::gf2
