#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

/// A 2-complex made of polygonal cells glued side to side, at most two cells
/// per side. Side s of a cell with k sides runs from corner s to corner
/// (s+1) mod k. A gluing with flip=false identifies corner-to-corner in the
/// same direction (s -> s', s+1 -> s'+1); flip=true reverses.
///
/// This is the common engine behind vertex links, closed surface pieces and
/// reconstructed normal surfaces.
class PolygonComplex {
public:
    struct SideRef {
        int cell = -1;
        int side = -1;
    };
    struct SideGluing {
        SideRef other;
        bool flip = false;
    };

    int add_cell(int sides);
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int sides_of(int cell) const { return cells_[static_cast<size_t>(cell)]; }

    void glue(SideRef a, SideRef b, bool flip);
    const std::optional<SideGluing>& gluing(SideRef s) const;

    struct Component {
        int cells = 0;
        long long vertices = 0;
        long long edges = 0;
        long long faces = 0;
        long long euler = 0;
        bool closed = true;
        bool orientable = true;
        int boundary_cycles = 0;
    };
    struct Analysis {
        std::vector<int> cell_component;
        std::vector<Component> components;
        /// corner class index per (cell, corner), addressed via corner_offset
        std::vector<int> corner_class;
        std::vector<int> corner_offset;
        int corner_class_count = 0;
    };

    Analysis analyze() const;

private:
    std::vector<int> cells_;  // number of sides per cell
    std::vector<int> offset_; // side/corner offset per cell
    std::vector<std::optional<SideGluing>> glue_;
    int total_sides_ = 0;
};

/// A surface triangulation: triangles with edges glued in pairs. Edge e of a
/// triangle runs from corner e to corner (e+1) mod 3. `reversed` follows the
/// PolygonComplex flip convention. Unglued edges form the boundary; boundary
/// cycles may carry labels.
struct SurfaceGluing {
    int tri = 0;
    int edge = 0;
    bool reversed = false;

    bool operator==(const SurfaceGluing& o) const {
        return tri == o.tri && edge == o.edge && reversed == o.reversed;
    }
};

struct BoundaryCycle {
    std::string label;
    std::vector<std::pair<int, int>> sides; // (triangle, edge) in cycle order
};

class SurfaceTriangulation {
public:
    SurfaceTriangulation() = default;
    explicit SurfaceTriangulation(int triangles) : glue_(static_cast<size_t>(triangles)) {}

    int triangle_count() const { return static_cast<int>(glue_.size()); }

    const std::optional<SurfaceGluing>& gluing(int tri, int edge) const {
        return glue_[static_cast<size_t>(tri)][static_cast<size_t>(edge)];
    }
    void set_gluing(int tri, int edge, int tri2, int edge2, bool reversed);

    std::vector<BoundaryCycle>& boundary_cycles() { return boundary_; }
    const std::vector<BoundaryCycle>& boundary_cycles() const { return boundary_; }

    PolygonComplex as_polygon_complex() const;

    struct Analysis {
        int components = 0;
        long long euler = 0;
        bool closed = true;
        bool connected = true;
        bool orientable = true;
        int boundary_cycles = 0;
        std::vector<PolygonComplex::Component> per_component;
    };
    Analysis analyze() const;

private:
    std::vector<std::array<std::optional<SurfaceGluing>, 3>> glue_;
    std::vector<BoundaryCycle> boundary_;
};

/// Builds a surface triangulation from triangles given as vertex triples.
/// Two triangles sharing a vertex pair are glued along that edge; a pair
/// carried by more than two triangles is an error. The gluing direction is
/// derived from the shared vertices.
SurfaceTriangulation surface_from_triples(const std::vector<std::array<int, 3>>& tris);

} // namespace crosscap
