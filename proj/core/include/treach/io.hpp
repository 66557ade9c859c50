#pragma once

#include <iosfwd>
#include <string>

#include "treach/reach.hpp"

namespace treach {

struct Problem {
    SystemModel model;
    TargetSetM target;
};

struct Result {
    Polyhedron set;
    Trace trace;
};

/// Parses and validates a problem file. All shape checks happen here;
/// malformed entries raise ParseError, inconsistent shapes raise
/// DimensionMismatch.
Problem parse_problem(const std::string& path);
Problem parse_problem_text(const std::string& text);

/// Canonical result serialization: generators as exact strings, lists
/// sorted, stable key order. Byte-identical across runs.
std::string serialize_result(const Result& r);

/// Canonical reformatting of a parsed problem.
std::string serialize_problem(const Problem& p);

/// CSV membership grid (x1, x2, member) over an inclusive box at the
/// given per-axis resolution. The polyhedron must be 2-dimensional.
std::string sample_csv(const Polyhedron& p, const Scalar& x1min, const Scalar& x1max,
                       const Scalar& x2min, const Scalar& x2max, std::size_t res);

} // namespace treach
