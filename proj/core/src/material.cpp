#include "fcfv/material.hpp"

#include <stdexcept>

namespace fcfv {

const char* to_string(ElasticModel model) {
    switch (model) {
        case ElasticModel::PlaneStress: return "plane_stress";
        case ElasticModel::PlaneStrain: return "plane_strain";
        case ElasticModel::ThreeD: return "3d";
    }
    return "?";
}

ElasticModel elastic_model_from_string(const std::string& name) {
    if (name == "plane_stress") return ElasticModel::PlaneStress;
    if (name == "plane_strain") return ElasticModel::PlaneStrain;
    if (name == "3d") return ElasticModel::ThreeD;
    throw std::invalid_argument("unknown elastic model '" + name + "'");
}

Material::Material(double young, double poisson, ElasticModel model_arg)
    : young_modulus(young), poisson_ratio(poisson), model(model_arg) {
    validate();
}

void Material::validate() const {
    if (!(young_modulus > 0.0))
        throw std::invalid_argument("Material: young_modulus must be positive");
    if (!(poisson_ratio > -1.0 && poisson_ratio < 0.5))
        throw std::invalid_argument("Material: poisson_ratio must lie in (-1, 0.5)");
}

} // namespace fcfv
