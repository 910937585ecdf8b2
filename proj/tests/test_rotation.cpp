#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cyl/rotation.hpp"

using namespace cyl;

TEST_SUITE("rotation") {

TEST_CASE("delta zero reproduces the edge lines") {
    for (Pair p : {Pair::T, Pair::O, Pair::I}) {
        const auto& ctx = context(p);
        const auto rotated = rotated_configuration(p, 0.0);
        REQUIRE(rotated.size() == ctx.lines.size());
        for (std::size_t k = 0; k < rotated.size(); ++k) {
            CHECK(rotated[k].tangency.dist(ctx.lines[k].tangency) < 1e-15);
            CHECK(rotated[k].direction.dist(ctx.lines[k].direction) < 1e-15);
        }
    }
}

TEST_CASE("rotated lines stay valid tangent lines") {
    for (double delta : {0.2, 0.9, 1.5}) {
        for (const auto& l : rotated_configuration(Pair::I, delta))
            CHECK(is_valid_tangent_line(l));
    }
}

TEST_CASE("opposite orbit keeps distance 2") {
    for (Pair p : {Pair::T, Pair::O, Pair::I}) {
        const int label = context(p).orbits.opposite_label;
        REQUIRE(label >= 0);
        for (double delta : {0.0, 0.3, 0.8, 1.2, pi / 2})
            CHECK(branch_distance_sq(p, label, delta) == doctest::Approx(4.0).epsilon(1e-12));
    }
}

TEST_CASE("branches are constant along an orbit") {
    const auto& ctx = context(Pair::I);
    const double delta = 0.47;
    const auto lines = rotated_configuration(Pair::I, delta);
    for (const auto& orbit : ctx.orbits.orbits) {
        const double ref = branch_distance_sq(Pair::I, orbit.label, delta);
        for (std::size_t k = 0; k < orbit.members.size(); k += 11) {
            const auto [i, j] = orbit.members[k];
            CHECK(line_distance(lines[i], lines[j]) * line_distance(lines[i], lines[j]) ==
                  doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("tetrahedron min curve is symmetric about pi/4") {
    for (double delta : {0.1, 0.35, 0.6, 0.77}) {
        CHECK(min_distance_sq(Pair::T, delta).d_sq ==
              doctest::Approx(min_distance_sq(Pair::T, pi / 2 - delta).d_sq).epsilon(1e-12));
    }
}

TEST_CASE("general neighbor formula") {
    CHECK(neighbor_distance_sq_general(0.5, pi / 3, 0.0) == 0.0);

    // Tetrahedron reduction: S = 1/sqrt 3, alpha = pi/3.
    const int t_label = context(Pair::T).orbits.neighboring_label;
    for (int i = 0; i <= 100; ++i) {
        const double delta = (pi / 2) * i / 100.0;
        const double general =
            neighbor_distance_sq_general(1.0 / std::sqrt(3.0), pi / 3, std::tan(delta));
        CHECK(general ==
              doctest::Approx(branch_distance_sq(Pair::T, t_label, delta)).epsilon(1e-10));
        const double tetra_neighbor_sq = [&] {
            const double T2 = std::tan(delta) * std::tan(delta);
            return 16.0 * T2 / ((3.0 * T2 + 1.0) * (T2 + 3.0));
        }();
        CHECK(general == doctest::Approx(tetra_neighbor_sq).epsilon(1e-12));
    }

    // Octahedron reduction: S = 1/sqrt 2, alpha = pi/4.
    for (int i = 0; i <= 100; ++i) {
        const double delta = (pi / 2) * i / 100.0;
        const double general =
            neighbor_distance_sq_general(1.0 / std::sqrt(2.0), pi / 4, std::tan(delta));
        CHECK(general ==
              doctest::Approx(closed_form_branch(Pair::O, FormId::o_neighbor, delta))
                  .epsilon(1e-12));
    }

    // Icosahedron reduction: S = 1/h, alpha = pi/5.
    const double h = base_solid(Pair::I).h;
    for (int i = 0; i <= 100; ++i) {
        const double delta = (pi / 2) * i / 100.0;
        const double general = neighbor_distance_sq_general(1.0 / h, pi / 5, std::tan(delta));
        CHECK(general ==
              doctest::Approx(closed_form_branch(Pair::I, FormId::i_neighbor, delta))
                  .epsilon(1e-12));
    }
}

TEST_CASE("closed forms match exactly one orbit branch") {
    const FormId forms[] = {FormId::o_neighbor, FormId::o_green, FormId::i_neighbor,
                            FormId::i_3,        FormId::i_5,     FormId::i_8,
                            FormId::i_9};
    for (FormId f : forms) {
        const Pair p = form_pair(f);
        const int label = orbit_label_for_form(f);
        for (int i = 0; i <= 64; ++i) {
            const double delta = (pi / 2) * i / 64.0;
            CHECK(closed_form_branch(p, f, delta) ==
                  doctest::Approx(branch_distance_sq(p, label, delta)).epsilon(1e-10));
        }
    }
    CHECK(orbit_label_for_form(FormId::o_neighbor) == context(Pair::O).orbits.neighboring_label);
    CHECK(orbit_label_for_form(FormId::i_neighbor) == context(Pair::I).orbits.neighboring_label);
}

TEST_CASE("closed form pair mismatch is a domain error") {
    CHECK_THROWS_AS(closed_form_branch(Pair::I, FormId::o_green, 0.3), std::domain_error);
    CHECK_THROWS_AS(closed_form_branch(Pair::T, FormId::i_5, 0.3), std::domain_error);
}

TEST_CASE("form id parsing round trip") {
    const FormId forms[] = {FormId::o_neighbor, FormId::o_green, FormId::i_neighbor,
                            FormId::i_3,        FormId::i_5,     FormId::i_8,
                            FormId::i_9};
    for (FormId f : forms) CHECK(parse_form_id(form_id_name(f)) == f);
    CHECK_THROWS_AS(parse_form_id("no-such-form"), std::invalid_argument);
}

TEST_CASE("named form values") {
    // The octahedron green branch starts at 8/3 and the two icosahedron
    // branches with a shared root both vanish at (pi - arctan 2)/2.
    CHECK(closed_form_branch(Pair::O, FormId::o_green, 0.0) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    const double common = (pi - std::atan(2.0)) / 2.0;
    CHECK(std::fabs(closed_form_branch(Pair::I, FormId::i_8, common)) < 1e-12);
    CHECK(std::fabs(closed_form_branch(Pair::I, FormId::i_9, common)) < 1e-12);
}

TEST_CASE("orbit minimum equals configuration minimum") {
    std::mt19937 rng(20240831);
    std::uniform_real_distribution<double> dist(0.0, pi / 2);
    for (Pair p : {Pair::T, Pair::O, Pair::I}) {
        for (int k = 0; k < 50; ++k) {
            const double delta = dist(rng);
            const MinResult m = min_distance_sq(p, delta);
            const double direct = configuration_min_distance(rotated_configuration(p, delta));
            CHECK(m.d_sq == doctest::Approx(direct * direct).epsilon(1e-10));
            CHECK_FALSE(m.active.empty());
        }
    }
}

TEST_CASE("min result reports the active branches") {
    const MinResult m = min_distance_sq(Pair::O, 0.3);
    REQUIRE(m.active.size() == 1);
    CHECK(m.active[0] == context(Pair::O).orbits.neighboring_label);
    double manual = 1e100;
    for (const auto& orbit : context(Pair::O).orbits.orbits)
        manual = std::min(manual, branch_distance_sq(Pair::O, orbit.label, 0.3));
    CHECK(m.d_sq == doctest::Approx(manual).epsilon(1e-15));
}

TEST_CASE("configuration minimum vanishes at the interior zeros") {
    CHECK(configuration_min_distance(rotated_configuration(Pair::O, std::atan(std::sqrt(2.0)))) <
          1e-9);
    CHECK(configuration_min_distance(rotated_configuration(Pair::I, pi / 4)) < 1e-9);
}

}  // TEST_SUITE
