#include "treach/linalg.hpp"

#include "treach/errors.hpp"

namespace treach {

namespace {
void require_same_size(const Vec& x, const Vec& y, const char* op) {
    if (x.size() != y.size())
        throw DimensionMismatch(std::string(op) + ": vector lengths " +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
}
} // namespace

Vec vec_oplus(const Vec& x, const Vec& y) {
    require_same_size(x, y, "vec_oplus");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = oplus(x[i], y[i]);
    return out;
}

Vec vec_scale(const Scalar& lambda, const Vec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = otimes(lambda, x[i]);
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    require_same_size(a, b, "dot");
    Scalar acc = Scalar::bottom();
    for (std::size_t i = 0; i < a.size(); ++i) acc = oplus(acc, otimes(a[i], b[i]));
    return acc;
}

bool vec_le(const Vec& x, const Vec& y) {
    require_same_size(x, y, "vec_le");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] <= y[i])) return false;
    return true;
}

bool is_bottom_vec(const Vec& x) {
    for (const auto& e : x)
        if (e.is_finite()) return false;
    return true;
}

std::string to_string(const Vec& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += to_string(x[i]);
    }
    return out + ")";
}

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

Vec Mat::row(std::size_t i) const {
    if (i >= rows_) throw IndexOutOfRange("Mat::row");
    Vec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

Vec Mat::col(std::size_t j) const {
    if (j >= cols_) throw IndexOutOfRange("Mat::col");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Mat Mat::sub(std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) const {
    if (r2 >= rows_ || c2 >= cols_ || r1 > r2 || c1 > c2)
        throw IndexOutOfRange("Mat::sub");
    Mat out(r2 - r1 + 1, c2 - c1 + 1);
    for (std::size_t i = r1; i <= r2; ++i)
        for (std::size_t j = c1; j <= c2; ++j) out.at(i - r1, j - c1) = at(i, j);
    return out;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    if (m.cols() != x.size())
        throw DimensionMismatch("mat_vec: " + std::to_string(m.cols()) + " cols vs vector of " +
                                std::to_string(x.size()));
    Vec out(m.rows(), Scalar::bottom());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = oplus(out[i], otimes(m.at(i, j), x[j]));
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul shape mismatch");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_bottom()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = oplus(out.at(i, j), otimes(a.at(i, k), b.at(k, j)));
        }
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

} // namespace treach
