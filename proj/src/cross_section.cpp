#include "rodlim/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "rodlim/errors.hpp"
#include "rodlim/quadrature.hpp"

namespace rodlim {

namespace {

double signed_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                   const Eigen::Vector2d& c) {
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

struct RawMoments {
    double area = 0.0;
    Eigen::Vector2d first = Eigen::Vector2d::Zero();   // int x
    Eigen::Matrix2d second = Eigen::Matrix2d::Zero();  // int x x^T (about origin)
};

// Exact polynomial moments of a triangulation (midside rule is exact for
// quadratics on straight triangles).
RawMoments raw_moments(const std::vector<Eigen::Vector2d>& v,
                       const std::vector<Eigen::Vector3i>& t) {
    RawMoments m;
    for (const auto& tri : t) {
        const Eigen::Vector2d &a = v[tri[0]], &b = v[tri[1]], &c = v[tri[2]];
        double area = signed_area(a, b, c);
        m.area += area;
        m.first += area / 3.0 * (a + b + c);
        for (const auto& q : tri_rule_order2()) {
            Eigen::Vector2d x = q.l0 * a + q.l1 * b + q.l2 * c;
            m.second += area * q.weight * x * x.transpose();
        }
    }
    return m;
}

std::vector<BoundaryEdge> find_boundary(const std::vector<Eigen::Vector2d>& v,
                                        const std::vector<Eigen::Vector3i>& t) {
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& tri : t) {
        for (int e = 0; e < 3; ++e) {
            int i = tri[e], j = tri[(e + 1) % 3];
            edge_count[{std::min(i, j), std::max(i, j)}]++;
        }
    }
    for (const auto& [edge, count] : edge_count) {
        if (count > 2)
            throw DegenerateMesh("non-conforming mesh: edge shared by " +
                                 std::to_string(count) + " triangles");
    }
    std::vector<BoundaryEdge> boundary;
    for (const auto& tri : t) {
        for (int e = 0; e < 3; ++e) {
            int i = tri[e], j = tri[(e + 1) % 3];
            if (edge_count[{std::min(i, j), std::max(i, j)}] == 1) {
                BoundaryEdge be;
                be.a = i;
                be.b = j;
                Eigen::Vector2d d = v[j] - v[i];
                // positively oriented triangle => interior on the left
                be.normal = Eigen::Vector2d(d.y(), -d.x()).normalized();
                boundary.push_back(be);
            }
        }
    }
    return boundary;
}

CrossSection finalize(std::vector<Eigen::Vector2d> v, std::vector<Eigen::Vector3i> t) {
    CrossSection cs;
    cs.vertices = std::move(v);
    cs.triangles = std::move(t);

    double mean_area = 0.0;
    for (const auto& tri : cs.triangles)
        mean_area += signed_area(cs.vertices[tri[0]], cs.vertices[tri[1]],
                                 cs.vertices[tri[2]]);
    mean_area /= std::max<size_t>(1, cs.triangles.size());
    for (const auto& tri : cs.triangles) {
        double a = signed_area(cs.vertices[tri[0]], cs.vertices[tri[1]],
                               cs.vertices[tri[2]]);
        if (a <= 1e-12 * mean_area)
            throw DegenerateMesh("degenerate or inverted triangle after normalization");
    }

    cs.boundary_edges = find_boundary(cs.vertices, cs.triangles);
    RawMoments m = raw_moments(cs.vertices, cs.triangles);
    cs.measure = m.area;
    cs.m2 = m.second(0, 0);
    cs.m3 = m.second(1, 1);

    if (std::abs(cs.measure - 1.0) > kGeomTol)
        throw DegenerateMesh("unit-measure normalization failed");
    if (m.first.cwiseAbs().maxCoeff() > kGeomTol ||
        std::abs(m.second(0, 1)) > kGeomTol)
        throw DegenerateMesh("centroid / product-moment normalization failed");
    if (cs.m2 <= 0.0 || cs.m3 <= 0.0)
        throw DegenerateMesh("nonpositive second moment");
    return cs;
}

}  // namespace

double CrossSection::triangle_area(int t) const {
    const auto& tri = triangles[t];
    return signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

double CrossSection::max_edge_length() const {
    double h = 0.0;
    for (const auto& tri : triangles)
        for (int e = 0; e < 3; ++e)
            h = std::max(h, (vertices[tri[e]] - vertices[tri[(e + 1) % 3]]).norm());
    return h;
}

Eigen::Vector2d NormalizationTransform::apply(const Eigen::Vector2d& x) const {
    Eigen::Rotation2Dd rot(rotation_angle);
    return scale * (rot * (x + translation));
}

CrossSection generate_disk(int refinement) {
    if (refinement < 1) throw ConfigError("disk refinement must be >= 1");
    const double radius = 1.0 / std::sqrt(std::numbers::pi);
    const int nrings = 4 << (refinement - 1);

    std::vector<Eigen::Vector2d> v;
    std::vector<Eigen::Vector3i> t;
    v.emplace_back(0.0, 0.0);
    std::vector<int> ring_start{0};
    for (int i = 1; i <= nrings; ++i) {
        ring_start.push_back(static_cast<int>(v.size()));
        double r = radius * i / nrings;
        int count = 6 * i;
        for (int j = 0; j < count; ++j) {
            double phi = 2.0 * std::numbers::pi * j / count;
            v.emplace_back(r * std::cos(phi), r * std::sin(phi));
        }
    }
    // Stitch consecutive rings by walking both vertex circles in angle.
    for (int i = 1; i <= nrings; ++i) {
        int inner_n = (i == 1) ? 1 : 6 * (i - 1);
        int outer_n = 6 * i;
        int inner0 = (i == 1) ? 0 : ring_start[i - 1];
        int outer0 = ring_start[i];
        if (i == 1) {
            for (int j = 0; j < outer_n; ++j)
                t.emplace_back(0, outer0 + j, outer0 + (j + 1) % outer_n);
            continue;
        }
        auto angle = [](int idx, int n) { return 2.0 * std::numbers::pi * idx / n; };
        int ii = 0, oo = 0;
        while (ii < inner_n || oo < outer_n) {
            bool advance_outer;
            if (ii == inner_n)
                advance_outer = true;
            else if (oo == outer_n)
                advance_outer = false;
            else
                advance_outer = angle(oo + 1, outer_n) <= angle(ii + 1, inner_n);
            if (advance_outer) {
                t.emplace_back(inner0 + ii % inner_n, outer0 + oo % outer_n,
                               outer0 + (oo + 1) % outer_n);
                ++oo;
            } else {
                t.emplace_back(inner0 + ii % inner_n, outer0 + oo % outer_n,
                               inner0 + (ii + 1) % inner_n);
                ++ii;
            }
        }
    }

    // unit measure (exact); centroid and product moment vanish by symmetry
    double area = 0.0;
    for (const auto& tri : t) area += signed_area(v[tri[0]], v[tri[1]], v[tri[2]]);
    double s = 1.0 / std::sqrt(area);
    for (auto& p : v) p *= s;
    return finalize(std::move(v), std::move(t));
}

CrossSection generate_rectangle(double aspect, int refinement) {
    if (aspect <= 0.0) throw ConfigError("rectangle aspect must be positive");
    if (refinement < 1) throw ConfigError("rectangle refinement must be >= 1");
    const double s2 = std::sqrt(aspect), s3 = 1.0 / std::sqrt(aspect);
    int base = 4 << (refinement - 1);
    int n2 = std::max(2, static_cast<int>(std::lround(base * std::sqrt(aspect))));
    int n3 = std::max(2, static_cast<int>(std::lround(base / std::sqrt(aspect))));
    n2 += n2 % 2;  // even counts keep the alternating diagonals symmetric
    n3 += n3 % 2;

    std::vector<Eigen::Vector2d> v;
    v.reserve((n2 + 1) * (n3 + 1));
    for (int j = 0; j <= n3; ++j)
        for (int i = 0; i <= n2; ++i)
            v.emplace_back(-0.5 * s2 + s2 * i / n2, -0.5 * s3 + s3 * j / n3);
    auto vid = [&](int i, int j) { return j * (n2 + 1) + i; };

    std::vector<Eigen::Vector3i> t;
    t.reserve(2 * n2 * n3);
    for (int j = 0; j < n3; ++j) {
        for (int i = 0; i < n2; ++i) {
            int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1), d = vid(i, j + 1);
            if ((i + j) % 2 == 0) {
                t.emplace_back(a, b, c);
                t.emplace_back(a, c, d);
            } else {
                t.emplace_back(a, b, d);
                t.emplace_back(b, c, d);
            }
        }
    }
    return finalize(std::move(v), std::move(t));
}

std::pair<CrossSection, NormalizationTransform> normalize(
    const std::vector<Eigen::Vector2d>& raw_vertices,
    const std::vector<Eigen::Vector3i>& raw_triangles) {
    if (raw_vertices.size() < 3 || raw_triangles.empty())
        throw DegenerateMesh("mesh needs at least one triangle");

    std::vector<Eigen::Vector3i> tris = raw_triangles;
    double mean_abs_area = 0.0;
    for (const auto& tri : tris)
        mean_abs_area += std::abs(signed_area(raw_vertices[tri[0]], raw_vertices[tri[1]],
                                              raw_vertices[tri[2]]));
    mean_abs_area /= tris.size();
    if (mean_abs_area <= 0.0) throw DegenerateMesh("zero-area mesh");
    for (auto& tri : tris) {
        double a = signed_area(raw_vertices[tri[0]], raw_vertices[tri[1]],
                               raw_vertices[tri[2]]);
        if (std::abs(a) <= 1e-12 * mean_abs_area)
            throw DegenerateMesh("zero-area triangle");
        if (a < 0.0) std::swap(tri[1], tri[2]);
    }

    RawMoments m = raw_moments(raw_vertices, tris);
    if (m.area <= 0.0) throw DegenerateMesh("nonpositive total area");

    NormalizationTransform tf;
    Eigen::Vector2d centroid = m.first / m.area;
    tf.translation = -centroid;

    // central second moments
    Eigen::Matrix2d J = m.second - m.area * centroid * centroid.transpose();
    double scale_ref = J.trace();
    if (std::abs(J(0, 0) - J(1, 1)) <= 1e-12 * scale_ref &&
        std::abs(J(0, 1)) <= 1e-12 * scale_ref) {
        tf.ambiguous_axes = true;
        tf.rotation_angle = 0.0;
    } else {
        // minimal-angle rotation onto the principal axes
        tf.rotation_angle = -0.5 * std::atan2(2.0 * J(0, 1), J(0, 0) - J(1, 1));
    }
    tf.scale = 1.0 / std::sqrt(m.area);

    std::vector<Eigen::Vector2d> v(raw_vertices.size());
    for (size_t i = 0; i < raw_vertices.size(); ++i) v[i] = tf.apply(raw_vertices[i]);
    return {finalize(std::move(v), std::move(tris)), tf};
}

double integrate(const CrossSection& cs,
                 const std::function<double(const Eigen::Vector2d&)>& f) {
    double sum = 0.0;
    auto accumulate = [&](const auto& rule) {
        for (int t = 0; t < cs.num_triangles(); ++t) {
            const auto& tri = cs.triangles[t];
            const Eigen::Vector2d &a = cs.vertices[tri[0]], &b = cs.vertices[tri[1]],
                                  &c = cs.vertices[tri[2]];
            double area = cs.triangle_area(t);
            for (const auto& q : rule)
                sum += area * q.weight * f(q.l0 * a + q.l1 * b + q.l2 * c);
        }
    };
    if (cs.quadrature_order <= 2)
        accumulate(tri_rule_order2());
    else
        accumulate(tri_rule_order4());
    return sum;
}

double integrate(const CrossSection& cs, const Eigen::VectorXd& vertex_values) {
    if (vertex_values.size() != cs.num_vertices())
        throw ConfigError("nodal field size does not match vertex count");
    double sum = 0.0;
    for (int t = 0; t < cs.num_triangles(); ++t) {
        const auto& tri = cs.triangles[t];
        sum += cs.triangle_area(t) / 3.0 *
               (vertex_values[tri[0]] + vertex_values[tri[1]] + vertex_values[tri[2]]);
    }
    return sum;
}

std::pair<std::vector<Eigen::Vector2d>, std::vector<Eigen::Vector3i>>
read_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open mesh file: " + path);
    int nv = 0, nt = 0;
    if (!(in >> nv >> nt) || nv < 3 || nt < 1)
        throw ConfigError("malformed mesh header in " + path);
    std::vector<Eigen::Vector2d> v(nv);
    for (int i = 0; i < nv; ++i)
        if (!(in >> v[i].x() >> v[i].y()))
            throw ConfigError("malformed vertex line in " + path);
    std::vector<Eigen::Vector3i> t(nt);
    for (int i = 0; i < nt; ++i) {
        if (!(in >> t[i][0] >> t[i][1] >> t[i][2]))
            throw ConfigError("malformed triangle line in " + path);
        for (int k = 0; k < 3; ++k)
            if (t[i][k] < 0 || t[i][k] >= nv)
                throw ConfigError("triangle index out of range in " + path);
    }
    return {std::move(v), std::move(t)};
}

void write_mesh_file(const std::string& path, const CrossSection& cs) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write mesh file: " + path);
    out << cs.num_vertices() << " " << cs.num_triangles() << "\n";
    char buf[80];
    for (const auto& p : cs.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x(), p.y());
        out << buf;
    }
    for (const auto& t : cs.triangles)
        out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

}  // namespace rodlim
