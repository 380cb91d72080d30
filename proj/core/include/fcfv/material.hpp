#ifndef FCFV_MATERIAL_HPP
#define FCFV_MATERIAL_HPP

#include <string>

namespace fcfv {

enum class ElasticModel { PlaneStress, PlaneStrain, ThreeD };

const char* to_string(ElasticModel model);
ElasticModel elastic_model_from_string(const std::string& name);

/// Linear isotropic elastic material. Poisson ratio must stay strictly below
/// 0.5; nearly incompressible values (e.g. 0.499999975) are fine.
struct Material {
    double young_modulus = 1.0;
    double poisson_ratio = 0.3;
    ElasticModel model = ElasticModel::PlaneStress;

    Material() = default;
    Material(double young, double poisson, ElasticModel model_arg);

    int nsd() const { return model == ElasticModel::ThreeD ? 3 : 2; }
    int msd() const { return nsd() * (nsd() + 1) / 2; }

    // Plane-model parameter: 1 for plane stress, 2 for plane strain.
    int theta() const { return model == ElasticModel::PlaneStrain ? 2 : 1; }

    double shear_modulus() const { return young_modulus / (2.0 * (1.0 + poisson_ratio)); }

    void validate() const;
};

} // namespace fcfv

#endif
