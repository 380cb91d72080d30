#ifndef FCFV_STABILIZATION_HPP
#define FCFV_STABILIZATION_HPP

#include <stdexcept>

#include "fcfv/material.hpp"
#include "fcfv/types.hpp"

namespace fcfv {

/// Face stabilisation policy: tau_j = tau * (E / length_scale) * I on every
/// face. The length scale is a per-problem characteristic length (1 for the
/// nondimensional benchmark setups).
struct Stabilization {
    double tau = 3.0;
    double length_scale = 1.0;

    Stabilization() = default;
    Stabilization(double tau_arg, double length_scale_arg)
        : tau(tau_arg), length_scale(length_scale_arg) {
        validate();
    }

    void validate() const {
        if (!(tau > 0.0)) throw std::invalid_argument("Stabilization: tau must be positive");
        if (!(length_scale > 0.0))
            throw std::invalid_argument("Stabilization: length_scale must be positive");
    }

    double face_value(const Material& material) const {
        return tau * material.young_modulus / length_scale;
    }

    MatNN face_tensor(const Material& material, int nsd) const {
        return face_value(material) * MatNN::Identity(nsd, nsd);
    }
};

} // namespace fcfv

#endif
