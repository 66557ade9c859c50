#pragma once

#include <span>
#include <vector>

#include "treach/cone.hpp"
#include "treach/linalg.hpp"

namespace treach {

/// Pseudo half-space H^U_{c,d}: the x whose combination with every
/// U-element sharing x's first coordinate stays on the (c|.) <= (d|.)
/// side. u_gens generate U; each must have first coordinate exactly 0.
class PseudoHalfSpace {
public:
    PseudoHalfSpace(Vec c, Vec d, std::vector<Vec> u_gens);

    const Vec& c() const { return c_; }
    const Vec& d() const { return d_; }
    const std::vector<Vec>& u_gens() const { return u_gens_; }
    std::size_t dim() const { return c_.size(); } // n+1

private:
    Vec c_, d_;
    std::vector<Vec> u_gens_;
};

/// Membership test, reduced to the generating set of U. Requires the
/// first coordinate of v to be 0 or bottom.
bool member(const PseudoHalfSpace& h, const Vec& v);

/// The matrix M_u with (M_u (*) x) = x (+) x1.u: first column u (first
/// entry u1 (+) 0), 0 diagonal, bottom elsewhere.
Mat build_mu(const Vec& u);

/// Largest lambda with v (+) lambda.w still in h, for v inside and w
/// outside. Bottom means the combination degenerates to v alone.
Scalar rho(const PseudoHalfSpace& h, const Vec& v, const Vec& w);

/// One incremental step: generators of Span(c.gens) intersected with h.
ConeV intersect_pseudo(const ConeV& c, const PseudoHalfSpace& h);

/// Folds intersect_pseudo over the constraints, starting from the
/// canonical basis of R_max^{n+1}, filtering redundant generators after
/// each step.
ConeV intersect_all(std::span<const PseudoHalfSpace> constraints, std::size_t n);

} // namespace treach
