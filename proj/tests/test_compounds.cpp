#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "cyl/compounds.hpp"
#include "cyl/rotation.hpp"

using namespace cyl;

namespace {

constexpr double kTau = 1.6180339887498948482;

Compound compound_at(Pair p, double delta) {
    return extract_compound(rotated_configuration(p, delta));
}

std::vector<Vec3> unit_directions(const Compound& c) {
    std::vector<Vec3> dirs;
    for (const auto& v : c.vertices) dirs.push_back(v.normalized());
    return dirs;
}

}  // namespace

TEST_SUITE("compounds") {

TEST_CASE("intersection graph of the four-triangle compound") {
    const auto lines = rotated_configuration(Pair::O, std::atan(std::sqrt(2.0)));
    const auto graph = intersection_graph(lines);
    CHECK(graph.crossings.size() == 12);  // 4 triangles, 3 corners each
    REQUIRE(graph.adjacency.size() == 12);
    for (const auto& neighbors : graph.adjacency) CHECK(neighbors.size() == 2);
    for (const auto& crossing : graph.crossings) {
        CHECK(line_distance(lines[crossing.i], lines[crossing.j]) < 1e-9);
        // The recorded point lies on both lines.
        for (int idx : {crossing.i, crossing.j}) {
            const Vec3 rel = crossing.point - lines[idx].tangency;
            const Vec3 off = rel - lines[idx].direction * rel.dot(lines[idx].direction);
            CHECK(off.norm() < 1e-9);
        }
    }
}

TEST_CASE("intersection graph of the five-skeleton compound") {
    const auto lines = rotated_configuration(Pair::I, pi / 4);
    const auto graph = intersection_graph(lines);
    CHECK(graph.crossings.size() == 60);  // 5 frames, 4 triple points, 3 pairs each
    for (const auto& neighbors : graph.adjacency) CHECK(neighbors.size() == 4);
}

TEST_CASE("no compound away from the zeros") {
    CHECK_THROWS_AS(compound_at(Pair::O, 0.3), std::domain_error);
    CHECK_THROWS_AS(compound_at(Pair::O, 0.0), std::domain_error);
}

TEST_CASE("four triangles from the octahedron zero") {
    const auto comp = compound_at(Pair::O, std::atan(std::sqrt(2.0)));
    REQUIRE(comp.components.size() == 4);
    std::set<int> used;
    for (const auto& c : comp.components) {
        CHECK(c.shape == ComponentShape::triangle);
        REQUIRE(c.cycle.size() == 3);
        REQUIRE(c.line_indices.size() == 3);
        used.insert(c.line_indices.begin(), c.line_indices.end());
        for (int k = 0; k < 3; ++k)
            CHECK(c.cycle[k].dist(c.cycle[(k + 1) % 3]) ==
                  doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
    }
    CHECK(used.size() == 12);

    const auto stats = vertex_stats(comp.vertices);
    CHECK(stats.vertex_count == 12);
    CHECK(stats.circumradius == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(stats.min_pairwise == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(stats.nearest_neighbor_count == 4);

    for (std::size_t i = 0; i < comp.components.size(); ++i)
        for (std::size_t j = i + 1; j < comp.components.size(); ++j)
            CHECK(std::abs(linking_number(comp.components[i].cycle,
                                          comp.components[j].cycle)) == 1);

    CHECK(axial_generation_check(Pair::O, comp));
}

TEST_CASE("ten triangles from the first icosahedron zero") {
    const auto comp = compound_at(Pair::I, 0.5 * std::atan(2.0 / std::sqrt(5.0)));
    REQUIRE(comp.components.size() == 10);
    for (const auto& c : comp.components) {
        CHECK(c.shape == ComponentShape::triangle);
        for (int k = 0; k < 3; ++k)
            CHECK(c.cycle[k].dist(c.cycle[(k + 1) % 3]) ==
                  doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
    }
    const auto stats = vertex_stats(comp.vertices);
    CHECK(stats.vertex_count == 30);
    CHECK(stats.circumradius == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(stats.min_pairwise == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-9));
    CHECK(stats.nearest_neighbor_count == 4);

    for (std::size_t i = 0; i < comp.components.size(); ++i)
        for (std::size_t j = i + 1; j < comp.components.size(); ++j)
            CHECK(std::abs(linking_number(comp.components[i].cycle,
                                          comp.components[j].cycle)) == 1);

    CHECK(axial_generation_check(Pair::I, comp));
}

TEST_CASE("five tetrahedron skeletons from the second icosahedron zero") {
    const auto comp = compound_at(Pair::I, pi / 4);
    REQUIRE(comp.components.size() == 5);
    for (const auto& c : comp.components) {
        CHECK(c.shape == ComponentShape::skeleton);
        REQUIRE(c.cycle.size() == 4);
        REQUIRE(c.line_indices.size() == 6);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                CHECK(c.cycle[a].dist(c.cycle[b]) ==
                      doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    }
    const auto stats = vertex_stats(comp.vertices);
    CHECK(stats.vertex_count == 20);
    CHECK(stats.circumradius == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK(stats.nearest_neighbor_count == 3);

    // Not planar, so one component cannot be carried around an axis.
    CHECK_FALSE(axial_generation_check(Pair::I, comp));
}

TEST_CASE("six pentagram stars from the third icosahedron zero") {
    const auto comp = compound_at(Pair::I, std::atan(kTau));
    REQUIRE(comp.components.size() == 6);
    for (const auto& c : comp.components) {
        CHECK(c.shape == ComponentShape::star);
        REQUIRE(c.cycle.size() == 5);
        REQUIRE(c.line_indices.size() == 5);

        // Star corners: distance sqrt 5 + 1 from the center, all in a plane
        // through the origin.
        const Vec3 normal = (c.cycle[0] - c.cycle[1]).cross(c.cycle[2] - c.cycle[1]).normalized();
        for (const auto& corner : c.cycle) {
            CHECK(corner.norm() == doctest::Approx(std::sqrt(5.0) + 1.0).epsilon(1e-9));
            CHECK(std::fabs(corner.dot(normal)) < 1e-9);
        }
        for (int k = 0; k < 5; ++k)
            CHECK(c.cycle[k].dist(c.cycle[(k + 1) % 5]) ==
                  doctest::Approx(6.155367074350506).epsilon(1e-9));
    }

    const auto pentagons = star_inner_pentagons(comp);
    REQUIRE(pentagons.size() == 6);
    for (const auto& pentagon : pentagons) {
        REQUIRE(pentagon.size() == 5);
        for (int k = 0; k < 5; ++k) {
            CHECK(pentagon[k].norm() == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-9));
            CHECK(pentagon[k].dist(pentagon[(k + 1) % 5]) ==
                  doctest::Approx(1.4530850560107220).epsilon(1e-9));
        }
    }

    // Stars pairwise unlinked, inner pentagons pairwise simply linked.
    for (std::size_t i = 0; i < comp.components.size(); ++i)
        for (std::size_t j = i + 1; j < comp.components.size(); ++j) {
            CHECK(linking_number(comp.components[i].cycle, comp.components[j].cycle) == 0);
            CHECK(std::abs(linking_number(pentagons[i], pentagons[j])) == 1);
        }

    CHECK(axial_generation_check(Pair::I, comp));
}

TEST_CASE("star_inner_pentagons rejects non-star compounds") {
    const auto comp = compound_at(Pair::O, std::atan(std::sqrt(2.0)));
    CHECK_THROWS_AS(star_inner_pentagons(comp), std::domain_error);
}

TEST_CASE("vertex stats on simple point sets") {
    {
        // Unit cube corners: nearest neighbors along the three axes.
        std::vector<Vec3> cube;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1}) cube.push_back({double(sx), double(sy), double(sz)});
        const auto stats = vertex_stats(cube);
        CHECK(stats.vertex_count == 8);
        CHECK(stats.circumradius == doctest::Approx(std::sqrt(3.0)));
        CHECK(stats.min_pairwise == doctest::Approx(2.0));
        CHECK(stats.nearest_neighbor_count == 3);
    }
    {
        // Duplicates collapse; uneven spacing has no uniform neighbor count.
        const std::vector<Vec3> pts = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {3, 0, 0}};
        const auto stats = vertex_stats(pts);
        CHECK(stats.vertex_count == 3);
        CHECK(stats.min_pairwise == doctest::Approx(1.0));
        CHECK(stats.nearest_neighbor_count == -1);
    }
}

TEST_CASE("linking number of explicit loops") {
    // Two unit circles through each other: the Hopf link.
    std::vector<Vec3> ring_a, ring_b;
    for (int k = 0; k < 24; ++k) {
        const double t = 2.0 * pi * k / 24;
        ring_a.push_back({std::cos(t), std::sin(t), 0.0});
        ring_b.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
    }
    CHECK(std::abs(linking_number(ring_a, ring_b)) == 1);

    // Far-apart triangles are unlinked.
    const std::vector<Vec3> tri_a = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    const std::vector<Vec3> tri_b = {{5, 5, 5}, {6, 5, 5}, {5, 6, 5}};
    CHECK(linking_number(tri_a, tri_b) == 0);

    // Loops sharing a vertex are degenerate.
    const std::vector<Vec3> tri_c = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}};
    CHECK_THROWS_AS(linking_number(tri_a, tri_c), std::domain_error);
}

TEST_CASE("ball radius from vertex directions") {
    {
        const auto comp = compound_at(Pair::I, 0.5 * std::atan(2.0 / std::sqrt(5.0)));
        CHECK(id_ball_radius(unit_directions(comp)) ==
              doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
    }
    {
        const auto comp = compound_at(Pair::O, std::atan(std::sqrt(2.0)));
        CHECK(id_ball_radius(unit_directions(comp)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        // Two directions at a right angle: r = 1 / (sqrt 2 - 1).
        const std::vector<Vec3> right = {{1, 0, 0}, {0, 1, 0}};
        CHECK(id_ball_radius(right) == doctest::Approx(1.0 / (std::sqrt(2.0) - 1.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(id_ball_radius({{1, 0, 0}, {-1, 0, 0}}), std::domain_error);
    CHECK_THROWS_AS(id_ball_radius({{1, 0, 0}, {1, 0, 0}}), std::domain_error);
}

TEST_CASE("compound vertices agree with the component corners") {
    const auto comp = compound_at(Pair::I, std::atan(kTau));
    // 10 crossings per star: 5 outer corners and 5 inner corners.
    CHECK(comp.vertices.size() == 60);
    for (const auto& c : comp.components)
        for (const auto& corner : c.cycle) {
            double best = 1e100;
            for (const auto& v : comp.vertices) best = std::min(best, corner.dist(v));
            CHECK(best < 1e-6);
        }
}

}  // TEST_SUITE
