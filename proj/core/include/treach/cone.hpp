#pragma once

#include <optional>
#include <vector>

#include "treach/linalg.hpp"

namespace treach {

/// Finitely generated tropical cone in generator (V) form. Stored
/// generators are always normalized, deduplicated, and sorted
/// lexicographically; an empty list is the cone {eps_n}.
struct ConeV {
    std::size_t dim = 0;
    std::vector<Vec> gens;

    friend bool operator==(const ConeV&, const ConeV&) = default;
};

/// Tropical polyhedron Span(span_gens) (+) Conv(conv_gens). An empty
/// pair of lists is the empty set; span-only values stand for a cone
/// viewed as a polyhedron.
struct Polyhedron {
    std::size_t dim = 0;
    std::vector<Vec> span_gens;
    std::vector<Vec> conv_gens;

    bool is_empty() const { return span_gens.empty() && conv_gens.empty(); }

    friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

/// Canonical ray scaling: first coordinate finite -> rescale it to 0;
/// otherwise the largest finite coordinate becomes 0. The all-bottom
/// ray is dropped (nullopt).
std::optional<Vec> normalize_generator(const Vec& v);

/// Normalizes, deduplicates, and sorts a raw generator list.
ConeV make_cone(std::size_t dim, std::vector<Vec> gens);

/// Cone spanned by the canonical basis (single-0 unit vectors): all of
/// R_max^dim.
ConeV basis_cone(std::size_t dim);

/// Residuation membership test: x in Span(gens)? On success optionally
/// yields one witness coefficient per generator.
bool cone_contains(const ConeV& c, const Vec& x, std::vector<Scalar>* witness = nullptr);

/// Truncation of every generator to its first r coordinates.
ConeV project(const ConeV& c, std::size_t r);

/// Single M-form row check: (lhs|x) <= (rhs|x).
bool row_satisfied(const Vec& lhs, const Vec& rhs, const Vec& x);

/// Incremental intersection with the ordinary half-space (a|x) <= (b|x).
ConeV intersect_halfspace(const ConeV& c, const Vec& a, const Vec& b);

/// Drops generators contained in the span of the others. Same set,
/// possibly fewer generators.
ConeV remove_redundant(const ConeV& c);

/// Lifting to dimension n+1: span generators get first coordinate eps,
/// conv generators get 0.
ConeV lift_to_cone(const Polyhedron& p);

/// Intersection with the plane x1 = 0 per the lifting convention:
/// finite-first-coordinate generators are rescaled into conv points,
/// the rest contribute their tails as rays.
Polyhedron restrict_to_plane(const ConeV& c);

/// Normalizes span rays, dedupes and sorts both lists.
Polyhedron make_polyhedron(std::size_t dim, std::vector<Vec> span_gens, std::vector<Vec> conv_gens);

bool poly_contains(const Polyhedron& p, const Vec& x);

/// Set equality by mutual generator membership.
bool poly_equiv(const Polyhedron& p, const Polyhedron& q);
bool cone_equiv(const ConeV& c, const ConeV& d);

} // namespace treach
