#include <doctest.h>

#include <random>

#include "support.hpp"
#include "treach/cone.hpp"
#include "treach/errors.hpp"

using namespace treach;
using tsupport::gens;
using tsupport::vec;

TEST_CASE("generator normalization") {
    CHECK(*normalize_generator(vec("-1 1 1")) == vec("0 2 2"));
    CHECK(*normalize_generator(vec("-inf 3 1")) == vec("-inf 0 -2"));
    CHECK_FALSE(normalize_generator(vec("-inf -inf")).has_value());
    SUBCASE("idempotent") {
        std::mt19937 rng(3);
        for (int t = 0; t < 200; ++t) {
            Vec v = tsupport::random_vec(rng, 4, -6, 6);
            auto once = normalize_generator(v);
            if (!once) continue;
            CHECK(*normalize_generator(*once) == *once);
        }
    }
}

TEST_CASE("lift_to_cone") {
    Polyhedron span_only = make_polyhedron(2, gens({"1 0", "0 1"}), {});
    ConeV lifted = lift_to_cone(span_only);
    CHECK(cone_equiv(lifted, make_cone(3, gens({"-inf 1 0", "-inf 0 1"}))));

    Polyhedron w = make_polyhedron(2, gens({"0 0", "1 0"}), gens({"1 1", "3 1", "1 3"}));
    CHECK(cone_equiv(lift_to_cone(w),
                     make_cone(3, gens({"0 1 1", "0 3 1", "0 1 3", "-inf 0 0", "-inf 1 0"}))));

    CHECK(lift_to_cone(Polyhedron{2, {}, {}}).gens.empty());
}

TEST_CASE("restrict_to_plane") {
    ConeV w_cone = make_cone(3, gens({"0 1 1", "0 3 1", "0 1 3", "-inf 0 0", "-inf 1 0"}));
    Polyhedron w = restrict_to_plane(w_cone);
    CHECK(poly_equiv(w, make_polyhedron(2, gens({"0 0", "1 0"}), gens({"1 1", "3 1", "1 3"}))));

    Polyhedron vertex = restrict_to_plane(make_cone(2, gens({"0 5"})));
    CHECK(vertex.span_gens.empty());
    CHECK(vertex.conv_gens == gens({"5"}));

    Polyhedron ray = restrict_to_plane(make_cone(3, gens({"-inf 0 1"})));
    CHECK(ray.conv_gens.empty());
    CHECK(ray.span_gens == gens({"0 1"}));
}

TEST_CASE("restrict after lift is the identity on sets") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::vector<Vec> span, conv;
        std::uniform_int_distribution<int> count(0, 3);
        for (int k = count(rng); k > 0; --k) span.push_back(tsupport::random_vec(rng, 3, -5, 5));
        for (int k = count(rng); k > 0; --k) conv.push_back(tsupport::random_vec(rng, 3, -5, 5));
        Polyhedron p = make_polyhedron(3, span, conv);
        CHECK(poly_equiv(restrict_to_plane(lift_to_cone(p)), p));
    }
}

TEST_CASE("projection") {
    ConeV c = make_cone(3, gens({"0 1 2", "-inf 0 1"}));
    CHECK(project(c, 3) == c);
    CHECK(cone_equiv(project(c, 2), make_cone(2, gens({"0 1", "-inf 0"}))));
    CHECK(project(make_cone(2, {bottom_vec(2)}), 1).gens.empty());
    CHECK_THROWS_AS(project(c, 4), IndexOutOfRange);
    CHECK_THROWS_AS(project(c, 0), IndexOutOfRange);

    SUBCASE("projection contains truncations of sampled points") {
        std::mt19937 rng(23);
        for (int t = 0; t < 1000; ++t) {
            ConeV cone = make_cone(4, {tsupport::random_vec(rng, 4, -4, 4),
                                       tsupport::random_vec(rng, 4, -4, 4),
                                       tsupport::random_vec(rng, 4, -4, 4)});
            Vec point = bottom_vec(4);
            for (const auto& g : cone.gens)
                point = vec_oplus(point, vec_scale(tsupport::random_scalar(rng, -4, 4), g));
            std::uniform_int_distribution<std::size_t> rdist(1, 4);
            std::size_t r = rdist(rng);
            CHECK(cone_contains(project(cone, r), Vec(point.begin(), point.begin() + r)));
        }
    }
}

TEST_CASE("cone membership by residuation") {
    ConeV c = make_cone(2, gens({"0 1", "0 3"}));
    CHECK(cone_contains(c, bottom_vec(2)));
    // grid oracle agrees before freezing the expected values
    CHECK(tsupport::grid_in_span(c.gens, vec("0 2"), -4, 4));
    CHECK(cone_contains(c, vec("0 2")));
    std::vector<Scalar> witness;
    CHECK(cone_contains(c, vec("0 2"), &witness));
    Vec rebuilt = vec_oplus(vec_scale(witness[0], c.gens[0]), vec_scale(witness[1], c.gens[1]));
    CHECK(rebuilt == vec("0 2"));

    ConeV single = make_cone(2, gens({"0 1"}));
    CHECK_FALSE(tsupport::grid_in_span(single.gens, vec("0 2"), -4, 4));
    CHECK_FALSE(cone_contains(single, vec("0 2")));
    CHECK_THROWS_AS(cone_contains(single, vec("0 2 0")), DimensionMismatch);
}

TEST_CASE("M-form row check") {
    CHECK(row_satisfied(vec("-inf -inf 0"), vec("-inf 1 -inf"), vec("0 0 0")));
    CHECK_FALSE(row_satisfied(vec("-inf -inf 0"), vec("-inf 1 -inf"), vec("0 1 3")));
    CHECK(row_satisfied(vec("1 2"), vec("0 0"), bottom_vec(2)));
}

TEST_CASE("intersect_halfspace") {
    ConeV c = basis_cone(3);
    SUBCASE("already inside") {
        ConeV inside = make_cone(2, gens({"0 0"}));
        CHECK(intersect_halfspace(inside, vec("0 -inf"), vec("-inf 0")) == inside);
    }
    SUBCASE("vacuous constraint") {
        CHECK(intersect_halfspace(c, bottom_vec(3), vec("0 1 2")) == c);
    }
    SUBCASE("unit-vector example") {
        ConeV cut = intersect_halfspace(c, vec("-inf -inf 0"), vec("0 -inf -inf"));
        CHECK(cone_equiv(cut, make_cone(3, gens({"0 -inf -inf", "-inf 0 -inf", "0 -inf 0"}))));
    }
    SUBCASE("soundness and desk-scale completeness") {
        std::mt19937 rng(29);
        for (int inst = 0; inst < 20; ++inst) {
            std::vector<Vec> raw;
            std::uniform_int_distribution<int> count(1, 4);
            for (int k = count(rng); k > 0; --k) raw.push_back(tsupport::random_vec(rng, 3, -5, 5));
            ConeV cone = make_cone(3, raw);
            Vec a = tsupport::random_vec(rng, 3, -5, 5, 0.4);
            Vec b = tsupport::random_vec(rng, 3, -5, 5, 0.4);
            ConeV cut = intersect_halfspace(cone, a, b);
            for (const auto& g : cut.gens) {
                CHECK(row_satisfied(a, b, g));
                CHECK(cone_contains(cone, g));
            }
            for (const auto& p : tsupport::grid_points(3, -8, 8)) {
                if (cone_contains(cone, p) && row_satisfied(a, b, p))
                    CHECK(cone_contains(cut, p));
            }
        }
    }
}

TEST_CASE("remove_redundant") {
    CHECK(remove_redundant(make_cone(2, gens({"0 1", "0 1"}))).gens.size() == 1);
    CHECK(tsupport::grid_in_span(gens({"0 1", "0 3"}), vec("0 2"), -4, 4));
    ConeV filtered = remove_redundant(make_cone(2, gens({"0 1", "0 3", "0 2"})));
    CHECK(filtered.gens == gens({"0 1", "0 3"}));
    ConeV units = make_cone(2, gens({"0 -inf", "-inf 0"}));
    CHECK(remove_redundant(units) == units);

    SUBCASE("set is preserved") {
        std::mt19937 rng(31);
        for (int t = 0; t < 100; ++t) {
            std::vector<Vec> raw;
            for (int k = 0; k < 5; ++k) raw.push_back(tsupport::random_vec(rng, 3, -4, 4));
            ConeV before = make_cone(3, raw);
            CHECK(cone_equiv(before, remove_redundant(before)));
        }
    }
}
