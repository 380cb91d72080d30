#ifndef FCFV_TYPES_HPP
#define FCFV_TYPES_HPP

#include <Eigen/Dense>

namespace fcfv {

// Small dense objects sized at runtime by the spatial dimension nsd (2 or 3)
// and the Voigt dimension msd = nsd*(nsd+1)/2 (3 or 6). The compile-time caps
// keep them on the stack.
using VecN = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;              // nsd
using VecM = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 6, 1>;              // msd
using MatNN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;
using MatMM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 6, 6>;
using MatMN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 6, 3>;

using Vec3 = Eigen::Vector3d;

constexpr int voigt_dim(int nsd) { return nsd * (nsd + 1) / 2; }

} // namespace fcfv

#endif
