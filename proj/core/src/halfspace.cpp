#include "treach/halfspace.hpp"

#include "treach/errors.hpp"

namespace treach {

namespace {

// x (+) x1.u, with x1 in {0, eps}.
Vec absorb(const Vec& x, const Vec& u) {
    if (x[0].is_bottom()) return x;
    return vec_oplus(x, u);
}

void check_normalized_first(const Vec& v, const char* who) {
    if (v[0].is_finite() && v[0] != Scalar::unit())
        throw UnnormalizedInput(std::string(who) + ": first coordinate must be 0 or -inf, got " +
                                to_string(v[0]));
}

} // namespace

PseudoHalfSpace::PseudoHalfSpace(Vec c, Vec d, std::vector<Vec> u_gens)
    : c_(std::move(c)), d_(std::move(d)), u_gens_(std::move(u_gens)) {
    if (c_.size() != d_.size())
        throw DimensionMismatch("PseudoHalfSpace: c and d lengths differ");
    if (c_.empty()) throw DimensionMismatch("PseudoHalfSpace: zero-dimensional rows");
    for (const auto& u : u_gens_) {
        if (u.size() != c_.size())
            throw DimensionMismatch("PseudoHalfSpace: u generator dimension mismatch");
        if (u[0] != Scalar::unit())
            throw UnnormalizedInput("PseudoHalfSpace: u generator with first coordinate != 0");
    }
}

bool member(const PseudoHalfSpace& h, const Vec& v) {
    if (v.size() != h.dim()) throw DimensionMismatch("member: vector dimension mismatch");
    check_normalized_first(v, "member");
    if (v[0].is_bottom()) return row_satisfied(h.c(), h.d(), v);
    for (const auto& u : h.u_gens())
        if (!row_satisfied(h.c(), h.d(), vec_oplus(v, u))) return false;
    return true;
}

Mat build_mu(const Vec& u) {
    const std::size_t n1 = u.size();
    if (n1 == 0) throw DimensionMismatch("build_mu: empty vector");
    Mat m(n1, n1);
    for (std::size_t i = 0; i < n1; ++i) {
        m.at(i, i) = Scalar::unit();
        m.at(i, 0) = oplus(m.at(i, 0), u[i]);
    }
    return m;
}

Scalar rho(const PseudoHalfSpace& h, const Vec& v, const Vec& w) {
    if (v.size() != h.dim() || w.size() != h.dim())
        throw DimensionMismatch("rho: vector dimension mismatch");
    if (!member(h, v)) throw PreconditionViolated("rho: v is not in the pseudo half-space");
    if (member(h, w)) throw PreconditionViolated("rho: w is in the pseudo half-space");

    bool found = false;
    Scalar best;
    auto consider = [&](const Vec& vu, const Vec& wu) {
        if (row_satisfied(h.c(), h.d(), wu)) return; // w passes this u: no bound
        Scalar lam = residual(dot(h.d(), vu), dot(h.c(), wu));
        if (!found || lam < best) {
            best = lam;
            found = true;
        }
    };
    for (const auto& u : h.u_gens()) consider(absorb(v, u), absorb(w, u));
    if (!found) throw PreconditionViolated("rho: no violated constraint for w");
    return best;
}

ConeV intersect_pseudo(const ConeV& c, const PseudoHalfSpace& h) {
    if (c.dim != h.dim()) throw DimensionMismatch("intersect_pseudo: dimension mismatch");
    std::vector<Vec> inside, outside;
    for (const auto& g : c.gens)
        (member(h, g) ? inside : outside).push_back(g);
    if (inside.empty()) return ConeV{c.dim, {}};
    if (outside.empty()) return c;
    std::vector<Vec> out = inside;
    for (const auto& v : inside)
        for (const auto& w : outside) {
            Scalar r = rho(h, v, w);
            if (r.is_bottom()) continue;
            out.push_back(vec_oplus(v, vec_scale(r, w)));
        }
    return remove_redundant(make_cone(c.dim, std::move(out)));
}

ConeV intersect_all(std::span<const PseudoHalfSpace> constraints, std::size_t n) {
    ConeV v = basis_cone(n + 1);
    for (const auto& h : constraints) {
        if (h.dim() != n + 1) throw DimensionMismatch("intersect_all: constraint dimension mismatch");
        v = intersect_pseudo(v, h);
    }
    return v;
}

} // namespace treach
