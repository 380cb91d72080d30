#ifndef FCFV_MESH_IO_HPP
#define FCFV_MESH_IO_HPP

#include <iosfwd>
#include <string>

#include "fcfv/mesh.hpp"

namespace fcfv {

// Text mesh format (one entity per line, '#' comments allowed):
//
//   fcfvmesh 1
//   dim <2|3>
//   kind <tri|quad|tet|hex>
//   nodes <count>
//   <x> <y> [<z>]                 ... count lines
//   elements <count>
//   <n0> <n1> ...                 ... count lines, 0-based node ids
//   boundary <count>
//   <dirichlet|neumann|symmetry> <n0> <n1> [...]   ... count lines
//
// Every boundary face must appear in the boundary section; interior faces
// must not.

/// Parses the text format, builds topology/geometry, applies boundary tags
/// and validates all mesh invariants. Throws ImportError (with the line
/// number) on malformed input and ClassificationError / MeshError on
/// inconsistent content.
Mesh import_mesh(std::istream& in);
Mesh import_mesh_file(const std::string& path);

/// Writes the same format with full double precision, so that a round trip
/// reproduces the geometry bit-exactly.
void export_mesh(const Mesh& mesh, std::ostream& out);
void export_mesh_file(const Mesh& mesh, const std::string& path);

} // namespace fcfv

#endif
