#ifndef FCFV_VTK_HPP
#define FCFV_VTK_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fcfv/mesh.hpp"
#include "fcfv/postproc.hpp"

namespace fcfv {

/// Legacy ASCII VTK unstructured grid with cell data: displacement
/// (vectors), stress (Voigt components) and Von Mises stress. Output bytes
/// are deterministic for fixed inputs.
void export_vtk(const Mesh& mesh, const std::vector<ElementSolution>& solutions, std::ostream& out);
void export_vtk_file(const Mesh& mesh, const std::vector<ElementSolution>& solutions,
                     const std::string& path);

} // namespace fcfv

#endif
