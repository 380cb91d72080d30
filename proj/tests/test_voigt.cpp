#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "fcfv/error.hpp"
#include "fcfv/voigt.hpp"
#include "test_util.hpp"

using namespace fcfv;
using fcfv::testing::random_material;
using fcfv::testing::random_symmetric;
using fcfv::testing::random_unit_normal;
using fcfv::testing::stress_voigt_of;
using fcfv::testing::uniform;

TEST_CASE("elasticity matrix: reference values") {
    SUBCASE("3D, nu = 0") {
        const MatMM d = elasticity_matrix(Material(1.0, 0.0, ElasticModel::ThreeD));
        MatMM expected = MatMM::Zero(6, 6);
        expected.diagonal() << 1, 1, 1, 0.5, 0.5, 0.5;
        CHECK((d - expected).norm() == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("plane strain, nu = 1/3") {
        const MatMM d = elasticity_matrix(Material(1.0, 1.0 / 3.0, ElasticModel::PlaneStrain));
        MatMM expected(3, 3);
        expected << 1.5, 0.75, 0.0, 0.75, 1.5, 0.0, 0.0, 0.0, 0.375;
        CHECK((d - expected).norm() < 1e-14);
    }
    SUBCASE("plane stress, nu = 0") {
        const MatMM d = elasticity_matrix(Material(1.0, 0.0, ElasticModel::PlaneStress));
        MatMM expected = MatMM::Zero(3, 3);
        expected.diagonal() << 1, 1, 0.5;
        CHECK((d - expected).norm() < 1e-14);
    }
}

TEST_CASE("elasticity matrix: invalid materials") {
    CHECK_THROWS_AS(Material(1.0, 0.5, ElasticModel::ThreeD), std::invalid_argument);
    CHECK_THROWS_AS(Material(-1.0, 0.3, ElasticModel::ThreeD), std::invalid_argument);
    CHECK_THROWS_AS(Material(1.0, -1.0, ElasticModel::PlaneStress), std::invalid_argument);
}

TEST_CASE("elasticity matrix: symmetric positive definite for random materials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Material material = random_material(rng);
        const MatMM d = elasticity_matrix(material);
        CHECK((d - d.transpose()).norm() <= 1e-14 * d.norm());
        Eigen::SelfAdjointEigenSolver<MatMM> eig(d);
        CHECK(eig.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("sqrt of the elasticity matrix") {
    SUBCASE("diagonal input") {
        MatMM d = MatMM::Zero(3, 3);
        d.diagonal() << 4, 9, 1;
        MatMM expected = MatMM::Zero(3, 3);
        expected.diagonal() << 2, 3, 1;
        CHECK((sqrt_elasticity_matrix(d) - expected).norm() < 1e-14);
    }
    SUBCASE("identity") {
        const MatMM eye = MatMM::Identity(6, 6);
        CHECK((sqrt_elasticity_matrix(eye) - eye).norm() < 1e-14);
    }
    SUBCASE("plane strain example factors its input") {
        const MatMM d = elasticity_matrix(Material(1.0, 1.0 / 3.0, ElasticModel::PlaneStrain));
        const MatMM m = sqrt_elasticity_matrix(d);
        CHECK((m * m.transpose() - d).norm() <= 1e-12 * d.norm());
        CHECK((m - m.transpose()).norm() <= 1e-13 * m.norm());
    }
    SUBCASE("rejects bad input") {
        MatMM asym = MatMM::Identity(3, 3);
        asym(0, 1) = 0.5;
        CHECK_THROWS_AS(sqrt_elasticity_matrix(asym), DecompositionError);
        MatMM indefinite = MatMM::Identity(3, 3);
        indefinite(2, 2) = -1.0;
        CHECK_THROWS_AS(sqrt_elasticity_matrix(indefinite), DecompositionError);
    }
    SUBCASE("random materials factor to 1e-12") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 1000; ++trial) {
            const MatMM d = elasticity_matrix(random_material(rng));
            const MatMM m = sqrt_elasticity_matrix(d);
            CHECK((m * m.transpose() - d).norm() <= 1e-12 * d.norm());
        }
    }
}

TEST_CASE("normal matrix layout and contraction identity") {
    SUBCASE("2D axis normal") {
        VecN n(2);
        n << 1, 0;
        MatMN expected(3, 2);
        expected << 1, 0, 0, 0, 0, 1;
        CHECK((normal_matrix(n) - expected).norm() == 0.0);
    }
    SUBCASE("3D axis normal") {
        VecN n(3);
        n << 0, 0, 1;
        const MatMN m = normal_matrix(n);
        MatMN expected = MatMN::Zero(6, 3);
        expected(2, 2) = 1;  // s33 column
        expected(4, 0) = 1;  // t13 row couples x
        expected(5, 1) = 1;  // t23 row couples y
        CHECK((m - expected).norm() == 0.0);
    }
    SUBCASE("non-unit normal rejected") {
        VecN n(2);
        n << 1, 1;
        CHECK_THROWS_AS(normal_matrix(n), std::invalid_argument);
    }
    SUBCASE("N^T S_V = S n for random pairs") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 1000; ++trial) {
            const int nsd = trial % 2 ? 2 : 3;
            const VecN n = random_unit_normal(rng, nsd);
            const MatNN s = random_symmetric(rng, nsd);
            const VecN lhs = normal_matrix(n).transpose() * stress_voigt_of(s);
            const VecN rhs = s * n;
            CHECK((lhs - rhs).norm() <= 1e-13 * (1.0 + rhs.norm()));
        }
    }
}

TEST_CASE("projection matrices") {
    SUBCASE("2D axis normal") {
        VecN n(2);
        n << 1, 0;
        const auto [pn, pt] = projection_matrices(n);
        MatNN expected_n(2, 2), expected_t(2, 2);
        expected_n << 1, 0, 0, 0;
        expected_t << 0, 0, 0, 1;
        CHECK((pn - expected_n).norm() == 0.0);
        CHECK((pt - expected_t).norm() == 0.0);
    }
    SUBCASE("3D axis normal has a single unit entry") {
        VecN n(3);
        n << 0, 1, 0;
        const auto proj = projection_matrices(n);
        CHECK(proj.normal(1, 1) == 1.0);
        CHECK(proj.normal.norm() == 1.0);
    }
    SUBCASE("idempotency and complementarity for random normals") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 1000; ++trial) {
            const int nsd = trial % 2 ? 2 : 3;
            const VecN n = random_unit_normal(rng, nsd);
            const auto [pn, pt] = projection_matrices(n);
            CHECK((pn + pt - MatNN::Identity(nsd, nsd)).norm() < 1e-14);
            CHECK((pn * pn - pn).norm() < 1e-14);
            CHECK((pt * pt - pt).norm() < 1e-14);
            CHECK((pn * pt).norm() < 1e-14);
        }
    }
}

TEST_CASE("stress from the mixed variable") {
    SUBCASE("zero maps to zero") {
        const MatMM m = MatMM::Identity(3, 3);
        CHECK(stress_from_mixed(VecM::Zero(3), m).norm() == 0.0);
    }
    SUBCASE("sign convention") {
        VecM mixed(3);
        mixed << -1, 0, 0;
        const VecM stress = stress_from_mixed(mixed, MatMM::Identity(3, 3));
        CHECK(stress[0] == 1.0);
        CHECK(stress.tail(2).norm() == 0.0);
    }
    SUBCASE("reproduces Hooke's law for linear displacement fields") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 200; ++trial) {
            const Material material = random_material(rng);
            const int nsd = material.nsd();
            const MatMM d = elasticity_matrix(material);
            const MatMM m = sqrt_elasticity_matrix(d);
            // Constant strain of a random linear displacement field.
            MatNN grad(nsd, nsd);
            for (int i = 0; i < nsd; ++i)
                for (int j = 0; j < nsd; ++j) grad(i, j) = uniform(rng, -1.0, 1.0);
            const VecM strain = symmetric_gradient_voigt(grad);
            const VecM mixed = -(m * strain);
            const VecM stress = stress_from_mixed(mixed, m);
            const VecM hooke = d * strain;
            CHECK((stress - hooke).norm() <= 1e-12 * (1.0 + hooke.norm()));
        }
    }
}

TEST_CASE("von Mises stress") {
    const Material steel3d(1.0, 0.3, ElasticModel::ThreeD);
    SUBCASE("uniaxial") {
        VecM s = VecM::Zero(6);
        s[0] = 7.5;
        CHECK(von_mises(s, steel3d) == doctest::Approx(7.5).epsilon(1e-14));
    }
    SUBCASE("hydrostatic") {
        VecM s = VecM::Zero(6);
        s[0] = s[1] = s[2] = 3.2;
        CHECK(von_mises(s, steel3d) == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("pure shear, plane stress") {
        VecM s = VecM::Zero(3);
        s[2] = 2.0;
        const Material sheet(1.0, 0.3, ElasticModel::PlaneStress);
        CHECK(von_mises(s, sheet) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
    }
    SUBCASE("plane strain embeds s33 = nu (s11 + s22)") {
        VecM s = VecM::Zero(3);
        s[0] = s[1] = 1.0;
        const Material strain_model(1.0, 0.5 - 1e-9, ElasticModel::PlaneStrain);
        // In the incompressible limit an equibiaxial state becomes hydrostatic.
        CHECK(von_mises(s, strain_model) == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("non-negative on random inputs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 500; ++trial) {
            const Material material = random_material(rng);
            VecM s(material.msd());
            for (int i = 0; i < s.size(); ++i) s[i] = uniform(rng, -2.0, 2.0);
            CHECK(von_mises(s, material) >= 0.0);
        }
    }
}
