#include "treach/cone.hpp"

#include <algorithm>

#include "treach/errors.hpp"

namespace treach {

namespace {

void require_dim(const ConeV& c, const Vec& x, const char* op) {
    if (x.size() != c.dim)
        throw DimensionMismatch(std::string(op) + ": cone dim " + std::to_string(c.dim) +
                                " vs vector of " + std::to_string(x.size()));
}

void sort_dedupe(std::vector<Vec>& gens) {
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

} // namespace

std::optional<Vec> normalize_generator(const Vec& v) {
    if (is_bottom_vec(v)) return std::nullopt;
    Scalar pivot = v[0];
    if (pivot.is_bottom()) {
        for (const auto& e : v) pivot = oplus(pivot, e);
    }
    return vec_scale(negate(pivot), v);
}

ConeV make_cone(std::size_t dim, std::vector<Vec> gens) {
    std::vector<Vec> out;
    out.reserve(gens.size());
    for (auto& g : gens) {
        if (g.size() != dim) throw DimensionMismatch("make_cone: generator of wrong dimension");
        if (auto n = normalize_generator(g)) out.push_back(std::move(*n));
    }
    sort_dedupe(out);
    return ConeV{dim, std::move(out)};
}

ConeV basis_cone(std::size_t dim) {
    std::vector<Vec> gens;
    gens.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e = bottom_vec(dim);
        e[i] = Scalar::unit();
        gens.push_back(std::move(e));
    }
    return ConeV{dim, std::move(gens)};
}

bool cone_contains(const ConeV& c, const Vec& x, std::vector<Scalar>* witness) {
    require_dim(c, x, "cone_contains");
    std::vector<Scalar> lambdas;
    lambdas.reserve(c.gens.size());
    Vec sup = bottom_vec(c.dim);
    for (const auto& g : c.gens) {
        // Largest lambda with lambda.g <= x.
        Scalar lam = Scalar::unit();
        bool constrained = false;
        for (std::size_t i = 0; i < c.dim && !lam.is_bottom(); ++i) {
            if (g[i].is_bottom()) continue;
            if (x[i].is_bottom()) {
                lam = Scalar::bottom();
                break;
            }
            Scalar bound = residual(x[i], g[i]);
            lam = constrained ? (bound < lam ? bound : lam) : bound;
            constrained = true;
        }
        if (!constrained) lam = Scalar::bottom();
        sup = vec_oplus(sup, vec_scale(lam, g));
        lambdas.push_back(std::move(lam));
    }
    if (sup != x) return false;
    if (witness) *witness = std::move(lambdas);
    return true;
}

ConeV project(const ConeV& c, std::size_t r) {
    if (r < 1 || r > c.dim) throw IndexOutOfRange("project: r out of range");
    std::vector<Vec> gens;
    gens.reserve(c.gens.size());
    for (const auto& g : c.gens) gens.emplace_back(g.begin(), g.begin() + r);
    return make_cone(r, std::move(gens));
}

bool row_satisfied(const Vec& lhs, const Vec& rhs, const Vec& x) {
    return dot(lhs, x) <= dot(rhs, x);
}

ConeV intersect_halfspace(const ConeV& c, const Vec& a, const Vec& b) {
    if (a.size() != c.dim || b.size() != c.dim)
        throw DimensionMismatch("intersect_halfspace: row dimension mismatch");
    std::vector<Vec> kept, rejected;
    for (const auto& g : c.gens)
        (row_satisfied(a, b, g) ? kept : rejected).push_back(g);
    if (rejected.empty()) return c;
    std::vector<Vec> out = kept;
    for (const auto& v : kept) {
        Scalar bv = dot(b, v);
        if (bv.is_bottom()) continue; // combination degenerates to v
        for (const auto& w : rejected) {
            Scalar rho = residual(bv, dot(a, w)); // (a|w) > (b|w) >= eps, so finite
            out.push_back(vec_oplus(v, vec_scale(rho, w)));
        }
    }
    return remove_redundant(make_cone(c.dim, std::move(out)));
}

ConeV remove_redundant(const ConeV& c) {
    std::vector<bool> alive(c.gens.size(), true);
    for (std::size_t i = 0; i < c.gens.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < c.gens.size(); ++j)
            if (j != i && alive[j]) others.push_back(c.gens[j]);
        ConeV rest{c.dim, std::move(others)};
        if (cone_contains(rest, c.gens[i])) alive[i] = false;
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        if (alive[i]) out.push_back(c.gens[i]);
    return ConeV{c.dim, std::move(out)};
}

ConeV lift_to_cone(const Polyhedron& p) {
    std::vector<Vec> gens;
    gens.reserve(p.span_gens.size() + p.conv_gens.size());
    for (const auto& v : p.span_gens) {
        Vec g{Scalar::bottom()};
        g.insert(g.end(), v.begin(), v.end());
        gens.push_back(std::move(g));
    }
    for (const auto& e : p.conv_gens) {
        Vec g{Scalar::unit()};
        g.insert(g.end(), e.begin(), e.end());
        gens.push_back(std::move(g));
    }
    return make_cone(p.dim + 1, std::move(gens));
}

Polyhedron restrict_to_plane(const ConeV& c) {
    if (c.dim < 2) throw DimensionMismatch("restrict_to_plane: cone dimension must be >= 2");
    std::vector<Vec> span, conv;
    for (const auto& g : c.gens) {
        if (g[0].is_finite()) {
            Vec scaled = vec_scale(negate(g[0]), g);
            conv.emplace_back(scaled.begin() + 1, scaled.end());
        } else {
            span.emplace_back(g.begin() + 1, g.end());
        }
    }
    return make_polyhedron(c.dim - 1, std::move(span), std::move(conv));
}

Polyhedron make_polyhedron(std::size_t dim, std::vector<Vec> span_gens,
                           std::vector<Vec> conv_gens) {
    std::vector<Vec> span;
    span.reserve(span_gens.size());
    for (auto& v : span_gens) {
        if (v.size() != dim) throw DimensionMismatch("make_polyhedron: span generator dimension");
        if (auto n = normalize_generator(v)) span.push_back(std::move(*n));
    }
    for (const auto& e : conv_gens)
        if (e.size() != dim) throw DimensionMismatch("make_polyhedron: conv generator dimension");
    sort_dedupe(span);
    sort_dedupe(conv_gens);
    return Polyhedron{dim, std::move(span), std::move(conv_gens)};
}

bool poly_contains(const Polyhedron& p, const Vec& x) {
    if (x.size() != p.dim) throw DimensionMismatch("poly_contains: dimension mismatch");
    if (p.is_empty()) return false;
    if (p.conv_gens.empty()) return cone_contains(ConeV{p.dim, p.span_gens}, x);
    Vec lifted{Scalar::unit()};
    lifted.insert(lifted.end(), x.begin(), x.end());
    return cone_contains(lift_to_cone(p), lifted);
}

bool poly_equiv(const Polyhedron& p, const Polyhedron& q) {
    if (p.dim != q.dim) return false;
    if (p.is_empty() || q.is_empty()) return p.is_empty() == q.is_empty();
    ConeV pr{p.dim, p.span_gens}, qr{q.dim, q.span_gens};
    for (const auto& v : p.span_gens)
        if (!cone_contains(qr, v)) return false;
    for (const auto& v : q.span_gens)
        if (!cone_contains(pr, v)) return false;
    for (const auto& e : p.conv_gens)
        if (!poly_contains(q, e)) return false;
    for (const auto& e : q.conv_gens)
        if (!poly_contains(p, e)) return false;
    return p.conv_gens.empty() == q.conv_gens.empty();
}

bool cone_equiv(const ConeV& c, const ConeV& d) {
    if (c.dim != d.dim) return false;
    for (const auto& g : c.gens)
        if (!cone_contains(d, g)) return false;
    for (const auto& g : d.gens)
        if (!cone_contains(c, g)) return false;
    return true;
}

} // namespace treach
