#pragma once

// Shared helpers for the test suites: compact literals, coefficient-grid
// oracles, and random instance generators. Oracles here are deliberately
// brute-force and independent of the library's incremental algorithms.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "treach/cone.hpp"
#include "treach/halfspace.hpp"
#include "treach/linalg.hpp"
#include "treach/scalar.hpp"

namespace tsupport {

using treach::ConeV;
using treach::Mat;
using treach::Polyhedron;
using treach::Scalar;
using treach::Vec;

// "0 2 -inf" -> vector
inline Vec vec(const std::string& text) {
    Vec out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(treach::parse_scalar(tok));
    return out;
}

// One row per string.
inline Mat mat(const std::vector<std::string>& rows) {
    std::vector<Vec> parsed;
    for (const auto& r : rows) parsed.push_back(vec(r));
    Mat m(parsed.size(), parsed[0].size());
    for (std::size_t i = 0; i < parsed.size(); ++i)
        for (std::size_t j = 0; j < parsed[i].size(); ++j) m.at(i, j) = parsed[i][j];
    return m;
}

inline std::vector<Vec> gens(const std::vector<std::string>& rows) {
    std::vector<Vec> out;
    for (const auto& r : rows) out.push_back(vec(r));
    return out;
}

// Integer grid {lo..hi} plus bottom.
inline std::vector<Scalar> coeff_grid(int lo, int hi) {
    std::vector<Scalar> out{Scalar::bottom()};
    for (int k = lo; k <= hi; ++k) out.push_back(Scalar{k});
    return out;
}

// Brute-force span membership: does some coefficient assignment from the
// grid reproduce x exactly?
inline bool grid_in_span(const std::vector<Vec>& generators, const Vec& x, int lo, int hi) {
    const auto grid = coeff_grid(lo, hi);
    std::vector<std::size_t> idx(generators.size(), 0);
    while (true) {
        Vec sum = treach::bottom_vec(x.size());
        for (std::size_t j = 0; j < generators.size(); ++j)
            sum = vec_oplus(sum, vec_scale(grid[idx[j]], generators[j]));
        if (sum == x) return true;
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (++idx[j] < grid.size()) break;
            idx[j] = 0;
        }
        if (j == idx.size()) return treach::is_bottom_vec(x) && generators.empty();
    }
}

// All points of the grid {lo..hi, -inf}^dim.
inline std::vector<Vec> grid_points(std::size_t dim, int lo, int hi) {
    const auto grid = coeff_grid(lo, hi);
    std::vector<Vec> out;
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
        Vec p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = grid[idx[i]];
        out.push_back(std::move(p));
        std::size_t i = 0;
        for (; i < dim; ++i) {
            if (++idx[i] < grid.size()) break;
            idx[i] = 0;
        }
        if (i == dim) return out;
    }
}

inline Scalar random_scalar(std::mt19937& rng, int lo, int hi, double p_bottom = 0.25) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < p_bottom) return Scalar::bottom();
    std::uniform_int_distribution<int> d(lo, hi);
    return Scalar{d(rng)};
}

inline Vec random_vec(std::mt19937& rng, std::size_t dim, int lo, int hi, double p_bottom = 0.25) {
    Vec out(dim);
    for (auto& e : out) e = random_scalar(rng, lo, hi, p_bottom);
    return out;
}

inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                      double p_bottom = 0.25) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, lo, hi, p_bottom);
    return m;
}

// Random lifted vector with first coordinate 0 or bottom.
inline Vec random_lifted_vec(std::mt19937& rng, std::size_t dim, int lo, int hi) {
    Vec out = random_vec(rng, dim, lo, hi);
    std::uniform_int_distribution<int> coin(0, 1);
    out[0] = coin(rng) ? Scalar::unit() : Scalar::bottom();
    return out;
}

// Random pseudo half-space of lifted dimension n+1 with n_u generators.
inline treach::PseudoHalfSpace random_pseudo(std::mt19937& rng, std::size_t n1, std::size_t n_u,
                                             int lo, int hi) {
    Vec c = random_vec(rng, n1, lo, hi, 0.4);
    Vec d = random_vec(rng, n1, lo, hi, 0.4);
    std::vector<Vec> u_gens;
    for (std::size_t k = 0; k < n_u; ++k) {
        Vec u = random_vec(rng, n1, lo, hi, 0.2);
        u[0] = Scalar::unit();
        u_gens.push_back(std::move(u));
    }
    return treach::PseudoHalfSpace(std::move(c), std::move(d), std::move(u_gens));
}

// Membership for arbitrary first coordinates: pseudo half-spaces are
// closed under finite scaling, so rescale into member()'s domain first.
inline bool in_pseudo(const treach::PseudoHalfSpace& h, const Vec& x) {
    auto n = treach::normalize_generator(x);
    if (!n) return true; // the bottom vector belongs to every pseudo half-space
    return treach::member(h, *n);
}

} // namespace tsupport
