#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "treach/scalar.hpp"

namespace treach {

using Vec = std::vector<Scalar>;

inline Vec bottom_vec(std::size_t n) { return Vec(n, Scalar::bottom()); }

Vec vec_oplus(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& lambda, const Vec& x);
Scalar dot(const Vec& a, const Vec& b);
bool vec_le(const Vec& x, const Vec& y);
bool is_bottom_vec(const Vec& x);
std::string to_string(const Vec& x);

// Lexicographic order under the max-plus total order on entries.
bool lex_less(const Vec& a, const Vec& b);

/// Dense max-plus matrix, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, Scalar fill = Scalar::bottom())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::unit();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    // Submatrix over inclusive 0-based index ranges.
    Mat sub(std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);

} // namespace treach
