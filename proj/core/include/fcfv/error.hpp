#ifndef FCFV_ERROR_HPP
#define FCFV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fcfv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Spectral decomposition rejected its input (asymmetric or indefinite).
struct DecompositionError : Error {
    using Error::Error;
};

struct MeshError : Error {
    using Error::Error;
};

// A boundary face no classification rule matched; carries the face indices.
struct ClassificationError : Error {
    ClassificationError(const std::string& msg, std::vector<int> faces_arg)
        : Error(msg), faces(std::move(faces_arg)) {}
    std::vector<int> faces;
};

struct ImportError : Error {
    ImportError(const std::string& msg, int line_arg) : Error(msg), line(line_arg) {}
    int line = 0;
};

// Linear solve failure; keeps the best iterate so callers can inspect it.
struct SolveError : Error {
    SolveError(const std::string& msg, Eigen::VectorXd iterate, double residual_arg, int iterations_arg)
        : Error(msg), best_iterate(std::move(iterate)), residual(residual_arg), iterations(iterations_arg) {}
    Eigen::VectorXd best_iterate;
    double residual = 0.0;
    int iterations = 0;
};

} // namespace fcfv

#endif
