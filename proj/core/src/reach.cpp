#include "treach/reach.hpp"

#include "treach/errors.hpp"

namespace treach {

namespace {

void push(Trace* trace, std::string stage, std::size_t count) {
    if (trace) trace->push_back({std::move(stage), count});
}

void check_target(const TargetSetM& z) {
    if (z.lhs.rows() != z.rhs.rows() || z.lhs.cols() != z.rhs.cols())
        throw DimensionMismatch("target: lhs and rhs shapes differ");
    if (z.lhs.cols() != z.dim + 1)
        throw DimensionMismatch("target: constraint matrices must have dim+1 columns");
}

void check_lifted_cone(const ConeV& c, const char* who) {
    for (const auto& g : c.gens)
        if (g[0].is_finite() && g[0] != Scalar::unit())
            throw UnnormalizedInput(std::string(who) +
                                    ": lifted cone generator with first coordinate != 0/-inf");
}

// Columns of the cone's generator matrix, as a Mat.
Mat gens_as_matrix(const ConeV& c) {
    Mat m(c.dim, c.gens.size());
    for (std::size_t j = 0; j < c.gens.size(); ++j)
        for (std::size_t i = 0; i < c.dim; ++i) m.at(i, j) = c.gens[j][i];
    return m;
}

void paste(Mat& dst, const Mat& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

// Double description of <m1, m2>^s: fold both orientations of every
// row over the canonical basis.
ConeV symmetric_to_vform(const Mat& m1, const Mat& m2, const char* stage, Trace* trace) {
    ConeV v = basis_cone(m1.cols());
    for (std::size_t i = 0; i < m1.rows(); ++i) {
        v = intersect_halfspace(v, m1.row(i), m2.row(i));
        v = intersect_halfspace(v, m2.row(i), m1.row(i));
        push(trace, std::string(stage) + "/row " + std::to_string(i + 1), v.gens.size());
    }
    return v;
}

// {x : (0,x) in c}. Unlike restrict_to_plane, a cone with no
// finite-first-coordinate generator restricts to the empty set here.
Polyhedron restrict_strict(const ConeV& c) {
    bool has_point = false;
    for (const auto& g : c.gens)
        if (g[0].is_finite()) has_point = true;
    if (!has_point) return Polyhedron{c.dim - 1, {}, {}};
    return restrict_to_plane(c);
}

} // namespace

Polyhedron linear_image(const Mat& m, const Polyhedron& p) {
    if (m.cols() != p.dim) throw DimensionMismatch("linear_image: matrix/polyhedron mismatch");
    std::vector<Vec> span, conv;
    for (const auto& v : p.span_gens) span.push_back(mat_vec(m, v));
    for (const auto& e : p.conv_gens) conv.push_back(mat_vec(m, e));
    return make_polyhedron(m.rows(), std::move(span), std::move(conv));
}

bool check_recession(const Polyhedron& w, const TargetSetM& z) {
    check_target(z);
    if (w.dim != z.dim) throw DimensionMismatch("check_recession: dimension mismatch");
    if (w.span_gens.empty()) return true;
    Mat lhs_state = z.lhs.sub(0, z.lhs.rows() - 1, 1, z.dim);
    Mat rhs_state = z.rhs.sub(0, z.rhs.rows() - 1, 1, z.dim);
    for (const auto& r : w.span_gens)
        for (std::size_t i = 0; i < lhs_state.rows(); ++i)
            if (!row_satisfied(lhs_state.row(i), rhs_state.row(i), r)) return false;
    return true;
}

Polyhedron phi(const Polyhedron& w, const TargetSetM& z, Trace* trace) {
    check_target(z);
    if (w.dim != z.dim) throw DimensionMismatch("phi: dimension mismatch");
    if (w.conv_gens.empty())
        throw EmptyDisturbance("phi: disturbance set has no bounded part");
    if (!check_recession(w, z)) {
        push(trace, "phi/recession check failed", 0);
        return Polyhedron{z.dim, {}, {}};
    }
    push(trace, "phi/recession check passed", w.span_gens.size());

    std::vector<Vec> u_gens;
    u_gens.reserve(w.conv_gens.size());
    for (const auto& e : w.conv_gens) {
        Vec u{Scalar::unit()};
        u.insert(u.end(), e.begin(), e.end());
        u_gens.push_back(std::move(u));
    }
    ConeV v = basis_cone(z.dim + 1);
    for (std::size_t i = 0; i < z.lhs.rows(); ++i) {
        PseudoHalfSpace h(z.lhs.row(i), z.rhs.row(i), u_gens);
        v = intersect_pseudo(v, h);
        push(trace, "phi/constraint " + std::to_string(i + 1), v.gens.size());
    }
    Polyhedron out = restrict_strict(v);
    push(trace, "phi", out.span_gens.size() + out.conv_gens.size());
    return out;
}

Polyhedron a_inverse(const Mat& a, const ConeV& z_cone, Trace* trace) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("a_inverse: A must be square");
    if (z_cone.dim != n + 1) throw DimensionMismatch("a_inverse: cone dimension must be n+1");
    check_lifted_cone(z_cone, "a_inverse");

    const Mat m = gens_as_matrix(z_cone);
    const std::size_t q = m.cols();
    Mat m1(n + 1, 1 + n + q), m2(n + 1, 1 + n + q);
    m1.at(0, 0) = Scalar::unit();
    paste(m1, a, 1, 1);
    if (q > 0) {
        paste(m2, m.sub(0, 0, 0, q - 1), 0, 1 + n);
        paste(m2, m.sub(1, n, 0, q - 1), 1, 1 + n);
    }
    ConeV v = symmetric_to_vform(m1, m2, "a_inverse", trace);
    Polyhedron out = restrict_strict(remove_redundant(project(v, n + 1)));
    push(trace, "a_inverse", out.span_gens.size() + out.conv_gens.size());
    return out;
}

Polyhedron gamma(const Mat& b, const Polyhedron& u_set, const ConeV& z_cone, Trace* trace) {
    const std::size_t n = b.rows();
    const std::size_t m_dim = b.cols();
    if (u_set.dim != m_dim) throw DimensionMismatch("gamma: control set dimension mismatch");
    if (z_cone.dim != n + 1) throw DimensionMismatch("gamma: cone dimension must be n+1");
    check_lifted_cone(z_cone, "gamma");

    const ConeV u_cone = lift_to_cone(u_set);
    const Mat r = gens_as_matrix(u_cone); // (m+1) x r_count, first row 0/-inf
    const Mat m = gens_as_matrix(z_cone); // (n+1) x q
    const std::size_t rc = r.cols();
    const std::size_t q = m.cols();
    const std::size_t width = 1 + n + rc + q;

    Mat m1(n + 2, width), m2(n + 2, width);
    paste(m1, Mat::identity(n), 0, 1);
    if (rc > 0) {
        paste(m1, mat_mul(b, r.sub(1, m_dim, 0, rc - 1)), 0, 1 + n);
        paste(m1, r.sub(0, 0, 0, rc - 1), n, 1 + n);
    }
    if (q > 0) {
        paste(m2, m.sub(1, n, 0, q - 1), 0, 1 + n + rc);
        paste(m1, m.sub(0, 0, 0, q - 1), n + 1, 1 + n + rc);
    }
    m2.at(n, 0) = Scalar::unit();
    m2.at(n + 1, 0) = Scalar::unit();

    ConeV v = symmetric_to_vform(m1, m2, "gamma", trace);
    Polyhedron out = restrict_strict(remove_redundant(project(v, n + 1)));
    push(trace, "gamma", out.span_gens.size() + out.conv_gens.size());
    return out;
}

Polyhedron upsilon(const SystemModel& model, const TargetSetM& target, Trace* trace) {
    check_target(target);
    const std::size_t n = target.dim;
    if (model.A.rows() != n || model.A.cols() != n)
        throw DimensionMismatch("upsilon: A must be n x n");
    if (model.B.rows() != n) throw DimensionMismatch("upsilon: B must have n rows");
    if (model.C.rows() != n) throw DimensionMismatch("upsilon: C must have n rows");
    if (model.U.dim != model.B.cols())
        throw DimensionMismatch("upsilon: control set dimension must match B");
    if (model.W.dim != model.C.cols())
        throw DimensionMismatch("upsilon: disturbance set dimension must match C");

    Polyhedron w_image = linear_image(model.C, model.W);
    push(trace, "linear_image(W)", w_image.span_gens.size() + w_image.conv_gens.size());

    Polyhedron p1 = phi(w_image, target, trace);
    if (p1.is_empty()) return p1;
    Polyhedron p2 = gamma(model.B, model.U, lift_to_cone(p1), trace);
    if (p2.is_empty()) return Polyhedron{n, {}, {}};
    return a_inverse(model.A, lift_to_cone(p2), trace);
}

ConeV target_to_cone(const TargetSetM& z) {
    check_target(z);
    ConeV v = basis_cone(z.dim + 1);
    for (std::size_t i = 0; i < z.lhs.rows(); ++i)
        v = intersect_halfspace(v, z.lhs.row(i), z.rhs.row(i));
    return v;
}

} // namespace treach
