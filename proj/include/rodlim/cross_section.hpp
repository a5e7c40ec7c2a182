#ifndef RODLIM_CROSS_SECTION_HPP
#define RODLIM_CROSS_SECTION_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace rodlim {

// Oriented boundary edge (a -> b) with the unit outward normal. The domain
// lies to the left of the edge.
struct BoundaryEdge {
    int a = -1;
    int b = -1;
    Eigen::Vector2d normal = Eigen::Vector2d::Zero();
};

// Triangulated cross-section, normalized so that
//   |omega| = 1,   int x2 = int x3 = int x2*x3 = 0.
// All fields are immutable after construction; instances may be shared
// freely across threads.
struct CrossSection {
    std::vector<Eigen::Vector2d> vertices;
    std::vector<Eigen::Vector3i> triangles;  // positively oriented
    std::vector<BoundaryEdge> boundary_edges;
    double measure = 0.0;  // == 1 after normalization
    double m2 = 0.0;       // int x2^2
    double m3 = 0.0;       // int x3^2
    int quadrature_order = 4;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
    double triangle_area(int t) const;
    double max_edge_length() const;
};

// Similarity transform applied to a raw mesh:
//   x_normalized = scale * R(rotation_angle) * (x_raw + translation)
struct NormalizationTransform {
    Eigen::Vector2d translation = Eigen::Vector2d::Zero();
    double rotation_angle = 0.0;
    double scale = 1.0;
    // Set when the two principal second moments coincide within 1e-12 and
    // the rotation therefore defaults to the identity.
    bool ambiguous_axes = false;

    Eigen::Vector2d apply(const Eigen::Vector2d& x) const;
};

inline constexpr double kGeomTol = 1e-10;

// Polygonal approximation of the disk {|x|^2 <= 1/pi}, rescaled to unit
// measure. refinement >= 1 controls the number of concentric rings (4*2^(r-1)).
CrossSection generate_disk(int refinement);

// Axis-aligned rectangle with side ratio `aspect` and unit measure,
// centered at the origin. Moments are exact for any refinement.
CrossSection generate_rectangle(double aspect, int refinement);

// Translates to the centroid, rotates to principal axes (kills int x2*x3)
// and scales uniformly to unit measure. Throws DegenerateMesh for zero-area
// or non-conforming input; inverted triangles are reoriented.
std::pair<CrossSection, NormalizationTransform> normalize(
    const std::vector<Eigen::Vector2d>& raw_vertices,
    const std::vector<Eigen::Vector3i>& raw_triangles);

// Quadrature of a scalar field over the cross-section. The callable overload
// samples f at physical quadrature points; the nodal overload interpolates
// per-vertex values linearly on each triangle.
double integrate(const CrossSection& cs,
                 const std::function<double(const Eigen::Vector2d&)>& f);
double integrate(const CrossSection& cs, const Eigen::VectorXd& vertex_values);

// Plain-text node/element format: "NV NT", NV lines "x2 x3", NT lines
// "i j k" (0-based). The returned mesh is raw, run it through normalize().
std::pair<std::vector<Eigen::Vector2d>, std::vector<Eigen::Vector3i>>
read_mesh_file(const std::string& path);
void write_mesh_file(const std::string& path, const CrossSection& cs);

}  // namespace rodlim

#endif
