#pragma once

#include <string>
#include <vector>

#include "treach/cone.hpp"
#include "treach/halfspace.hpp"
#include "treach/linalg.hpp"

namespace treach {

/// x_k = A x_{k-1} (+) B u_k (+) C w_k with u in U, w in W.
struct SystemModel {
    Mat A;          // n x n
    Mat B;          // n x m
    Mat C;          // n x q
    Polyhedron U;   // dim m
    Polyhedron W;   // dim q
};

/// Target set <lhs, rhs> in lifted coordinates: rows constrain (0, x).
struct TargetSetM {
    std::size_t dim = 0; // state dimension n; matrices are q x (n+1)
    Mat lhs;
    Mat rhs;
};

struct TraceEntry {
    std::string stage;
    std::size_t generators = 0;
};
using Trace = std::vector<TraceEntry>;

/// Image {M (*) x : x in P}; generator images generate it.
Polyhedron linear_image(const Mat& m, const Polyhedron& p);

/// Every recession direction of w must satisfy the target's constraint
/// rows restricted to the state block; otherwise phi is empty.
bool check_recession(const Polyhedron& w, const TargetSetM& z);

/// Universal preimage: states x with x (+) w in Z for every w in W.
/// W must already absorb the disturbance matrix (see linear_image).
Polyhedron phi(const Polyhedron& w, const TargetSetM& z, Trace* trace = nullptr);

/// Preimage {x : A (*) x in Z}, Z given as a lifted generator cone.
Polyhedron a_inverse(const Mat& a, const ConeV& z_cone, Trace* trace = nullptr);

/// Existential preimage {x : exists u in U, x (+) B (*) u in Z}.
Polyhedron gamma(const Mat& b, const Polyhedron& u_set, const ConeV& z_cone,
                 Trace* trace = nullptr);

/// One-step backward reachable set A^-1(gamma(phi(target))).
Polyhedron upsilon(const SystemModel& model, const TargetSetM& target, Trace* trace = nullptr);

/// V-form of the target's constraint cone <lhs, rhs> in R_max^{n+1}.
ConeV target_to_cone(const TargetSetM& z);

} // namespace treach
