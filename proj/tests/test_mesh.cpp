#include <doctest.h>

#include <cmath>

#include "fcfv/error.hpp"
#include "fcfv/face_sets.hpp"
#include "fcfv/structured.hpp"

using namespace fcfv;

namespace {

int count_boundary(const Mesh& mesh) {
    int n = 0;
    for (const auto& f : mesh.faces) n += f.is_boundary();
    return n;
}

Box beam_box() {
    Box box;
    box.lo = Vec3(-1, -1, 0);
    box.hi = Vec3(1, 1, 10);
    return box;
}

} // namespace

TEST_CASE("structured 2D meshes: counts") {
    SUBCASE("r=1 quads") {
        const Mesh mesh = generate_structured_2d(1, ElemKind::Quadrilateral);
        CHECK(mesh.num_elements() == 4);
        CHECK(mesh.num_faces() == 12);
        CHECK(count_boundary(mesh) == 8);
    }
    SUBCASE("r=1 triangles") {
        const Mesh mesh = generate_structured_2d(1, ElemKind::Triangle);
        CHECK(mesh.num_elements() == 16);
    }
    SUBCASE("r=0 quad") {
        const Mesh mesh = generate_structured_2d(0, ElemKind::Quadrilateral);
        CHECK(mesh.num_elements() == 1);
        CHECK(mesh.num_faces() == 4);
        CHECK(count_boundary(mesh) == 4);
    }
}

TEST_CASE("structured 3D meshes: counts on the beam domain") {
    CHECK(generate_structured_3d(1, ElemKind::Hexahedron, beam_box()).num_elements() == 5);
    CHECK(generate_structured_3d(2, ElemKind::Hexahedron, beam_box()).num_elements() == 40);
    CHECK(generate_structured_3d(1, ElemKind::Tetrahedron, beam_box()).num_elements() == 120);
    CHECK(generate_structured_3d(2, ElemKind::Tetrahedron, beam_box()).num_elements() == 960);
}

TEST_CASE("single-cell cube") {
    Box cube;
    const Mesh mesh = generate_structured_3d(1, ElemKind::Hexahedron, cube);
    CHECK(mesh.num_elements() == 1);
    CHECK(mesh.num_faces() == 6);
    CHECK(count_boundary(mesh) == 6);
    CHECK(mesh.elem_measure[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("geometry: unit square element") {
    const Mesh mesh = generate_structured_2d(0, ElemKind::Quadrilateral);
    CHECK(mesh.elem_measure[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& face : mesh.faces) CHECK(face.area == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((mesh.elem_centroid[0] - Vec3(0.5, 0.5, 0)).norm() < 1e-14);
}

TEST_CASE("geometry: unit right tetrahedron") {
    Mesh mesh;
    mesh.nsd = 3;
    mesh.kind = ElemKind::Tetrahedron;
    mesh.nodes = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    mesh.elements = {{0, 1, 2, 3}};
    build_topology(mesh);
    CHECK(mesh.elem_measure[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(mesh.num_faces() == 4);
}

TEST_CASE("closed-surface identity and pairing on all mesh families") {
    std::vector<Mesh> meshes;
    meshes.push_back(generate_structured_2d(2, ElemKind::Quadrilateral));
    meshes.push_back(generate_structured_2d(2, ElemKind::Triangle));
    meshes.push_back(generate_structured_3d(2, ElemKind::Hexahedron, beam_box()));
    meshes.push_back(generate_structured_3d(1, ElemKind::Tetrahedron, beam_box()));
    meshes.push_back(generate_shell_mesh(20, 4, 2, 10.0));
    meshes.push_back(distort_mesh(generate_structured_2d(3, ElemKind::Triangle), 5));

    for (const auto& mesh : meshes) {
        CHECK_NOTHROW(check_mesh(mesh));
        // Interior faces are shared by exactly two elements; the stored
        // normal points from the first towards the second.
        for (const auto& face : mesh.faces) {
            if (face.is_boundary()) continue;
            const Vec3 delta = mesh.elem_centroid[face.elem[1]] - mesh.elem_centroid[face.elem[0]];
            CHECK(face.normal.dot(delta) > 0.0);
        }
        // Boundary faces point away from their element.
        for (const auto& face : mesh.faces) {
            if (!face.is_boundary()) continue;
            const Vec3 delta = face.barycenter - mesh.elem_centroid[face.elem[0]];
            CHECK(face.normal.dot(delta) > 0.0);
        }
    }
}

TEST_CASE("mesh generation is deterministic") {
    const Mesh a = generate_structured_2d(3, ElemKind::Triangle);
    const Mesh b = generate_structured_2d(3, ElemKind::Triangle);
    CHECK(a.hash() == b.hash());
}

TEST_CASE("mesh distortion") {
    const Mesh base = generate_structured_2d(3, ElemKind::Quadrilateral);
    const double h_min = base.min_edge_length();
    CHECK(h_min == doctest::Approx(0.125).epsilon(1e-12));

    SUBCASE("zero amplitude is the identity") {
        const Mesh same = distort_mesh(base, 42, 0.0);
        CHECK(same.hash() == base.hash());
    }
    SUBCASE("bounded moves, fixed boundary, same connectivity") {
        const Mesh moved = distort_mesh(base, 42);
        REQUIRE(moved.num_nodes() == base.num_nodes());
        CHECK(moved.elements == base.elements);
        const auto boundary = base.boundary_node_mask();
        for (int n = 0; n < base.num_nodes(); ++n) {
            const Vec3 delta = moved.nodes[n] - base.nodes[n];
            if (boundary[n]) {
                CHECK(delta.norm() == 0.0);
            } else {
                CHECK(std::abs(delta.x()) <= h_min / 3.0);
                CHECK(std::abs(delta.y()) <= h_min / 3.0);
            }
        }
        CHECK_NOTHROW(check_mesh(moved));
    }
    SUBCASE("deterministic per seed, different across seeds") {
        const Mesh tri = generate_structured_2d(3, ElemKind::Triangle);
        const Mesh d1 = distort_mesh(tri, 1);
        const Mesh d1_again = distort_mesh(tri, 1);
        const Mesh d2 = distort_mesh(tri, 2);
        CHECK(d1.hash() == d1_again.hash());
        CHECK(d1.hash() != d2.hash());
        CHECK(d1.elements == d2.elements);
    }
}

TEST_CASE("shell mesh") {
    SUBCASE("element count and volume") {
        const Mesh mesh = generate_shell_mesh(80, 10, 2, 20.0);
        CHECK(mesh.num_elements() == 1600);
        double volume = 0.0;
        for (double v : mesh.elem_measure) volume += v;
        const double a = 1.0, t = 0.02, L = 5.0;
        const double exact = M_PI * ((a + t / 2) * (a + t / 2) - (a - t / 2) * (a - t / 2)) * L;
        CHECK(std::abs(volume - exact) / exact < 0.005);
    }
    SUBCASE("stretch = 1 gives uniform axial spacing") {
        const Mesh mesh = generate_shell_mesh(8, 5, 1, 1.0);
        std::vector<double> zs;
        for (const auto& p : mesh.nodes)
            if (std::abs(p.x() - 0.99) < 1e-9 && std::abs(p.y()) < 1e-9) zs.push_back(p.z());
        REQUIRE(zs.size() == 6);
        std::sort(zs.begin(), zs.end());
        for (std::size_t k = 0; k + 1 < zs.size(); ++k)
            CHECK(zs[k + 1] - zs[k] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("stretching clusters towards the ends") {
        const Mesh mesh = generate_shell_mesh(8, 10, 1, 30.0);
        std::vector<double> zs;
        for (const auto& p : mesh.nodes)
            if (std::abs(p.x() - 0.99) < 1e-9 && std::abs(p.y()) < 1e-9) zs.push_back(p.z());
        std::sort(zs.begin(), zs.end());
        REQUIRE(zs.size() == 11);
        const double end_gap = zs[1] - zs[0];
        const double mid_gap = zs[6] - zs[5];
        // Discrete gap ratio sits between 1 and the continuum ratio (the
        // stretch parameter itself).
        CHECK(mid_gap / end_gap > 5.0);
        CHECK(mid_gap / end_gap < 30.0);
        CHECK(zs.front() == doctest::Approx(-2.5).epsilon(1e-12));
        CHECK(zs.back() == doctest::Approx(2.5).epsilon(1e-12));
        for (std::size_t k = 0; k < zs.size(); ++k)
            CHECK(zs[k] == doctest::Approx(-zs[zs.size() - 1 - k]).epsilon(1e-12));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(generate_shell_mesh(2, 4, 2, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(generate_shell_mesh(8, 4, 2, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(generate_shell_mesh(8, 4, 2, 2.0, 1.0, 3.0), std::invalid_argument);
    }
}

TEST_CASE("face classification") {
    SUBCASE("traction edge plus Dirichlet elsewhere") {
        Mesh mesh = generate_structured_2d(1, ElemKind::Quadrilateral);
        BoundarySpec spec;
        spec.add(BoundarySpec::plane(1, 0.0), FaceTag::Neumann);
        spec.add([](const Vec3&, const Vec3&) { return true; }, FaceTag::Dirichlet);
        const FaceSets sets = classify_faces(mesh, spec);
        int neumann = 0, dirichlet = 0;
        for (const auto& face : mesh.faces) {
            neumann += face.tag == FaceTag::Neumann;
            dirichlet += face.tag == FaceTag::Dirichlet;
        }
        CHECK(neumann == 2);
        CHECK(dirichlet == 6);
        CHECK(sets.n_hybrid_faces == 4 + 2);
    }
    SUBCASE("all-Dirichlet boundary leaves interior DOFs only") {
        Mesh mesh = generate_structured_2d(1, ElemKind::Quadrilateral);
        const FaceSets sets = classify_faces(mesh, BoundarySpec::all(FaceTag::Dirichlet));
        CHECK(sets.n_hybrid_faces == 4);
        CHECK(sets.n_dirichlet_faces == 8);
    }
    SUBCASE("unmatched boundary faces are reported") {
        Mesh mesh = generate_structured_2d(1, ElemKind::Quadrilateral);
        BoundarySpec spec;
        spec.add(BoundarySpec::plane(1, 0.0), FaceTag::Neumann);
        try {
            classify_faces(mesh, spec);
            FAIL("expected ClassificationError");
        } catch (const ClassificationError& err) {
            CHECK(err.faces.size() == 6);
        }
    }
}
