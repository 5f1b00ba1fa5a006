#include "crosscap/surface.hpp"

#include <map>
#include <stdexcept>

#include "crosscap/union_find.hpp"

namespace crosscap {

int PolygonComplex::add_cell(int sides) {
    if (sides < 3) throw std::invalid_argument("polygon cell needs at least 3 sides");
    int id = cell_count();
    cells_.push_back(sides);
    offset_.push_back(total_sides_);
    total_sides_ += sides;
    glue_.resize(static_cast<size_t>(total_sides_));
    return id;
}

void PolygonComplex::glue(SideRef a, SideRef b, bool flip) {
    auto idx = [&](SideRef s) {
        if (s.cell < 0 || s.cell >= cell_count() || s.side < 0 || s.side >= cells_[static_cast<size_t>(s.cell)])
            throw std::invalid_argument("polygon gluing out of range");
        return static_cast<size_t>(offset_[static_cast<size_t>(s.cell)] + s.side);
    };
    size_t ia = idx(a), ib = idx(b);
    if (ia == ib) throw std::invalid_argument("polygon side glued to itself");
    if (glue_[ia] || glue_[ib]) throw std::invalid_argument("polygon side glued twice");
    glue_[ia] = SideGluing{b, flip};
    glue_[ib] = SideGluing{a, flip};
}

const std::optional<PolygonComplex::SideGluing>& PolygonComplex::gluing(SideRef s) const {
    return glue_[static_cast<size_t>(offset_[static_cast<size_t>(s.cell)] + s.side)];
}

PolygonComplex::Analysis PolygonComplex::analyze() const {
    int n = cell_count();
    Analysis out;
    out.corner_offset = offset_;

    // corner classes
    UnionFind corners(total_sides_);
    UnionFind comps(n);
    auto corner_id = [&](int cell, int k) {
        int m = cells_[static_cast<size_t>(cell)];
        return offset_[static_cast<size_t>(cell)] + ((k % m) + m) % m;
    };
    for (int c = 0; c < n; ++c) {
        int m = cells_[static_cast<size_t>(c)];
        for (int s = 0; s < m; ++s) {
            const auto& g = glue_[static_cast<size_t>(offset_[static_cast<size_t>(c)] + s)];
            if (!g) continue;
            comps.unite(c, g->other.cell);
            if (g->flip) {
                corners.unite(corner_id(c, s), corner_id(g->other.cell, g->other.side + 1));
                corners.unite(corner_id(c, s + 1), corner_id(g->other.cell, g->other.side));
            } else {
                corners.unite(corner_id(c, s), corner_id(g->other.cell, g->other.side));
                corners.unite(corner_id(c, s + 1), corner_id(g->other.cell, g->other.side + 1));
            }
        }
    }

    out.corner_class.assign(static_cast<size_t>(total_sides_), -1);
    int nclasses = 0;
    {
        std::map<int, int> rep_to_class;
        for (int i = 0; i < total_sides_; ++i) {
            int r = corners.find(i);
            auto it = rep_to_class.find(r);
            if (it == rep_to_class.end()) it = rep_to_class.emplace(r, nclasses++).first;
            out.corner_class[static_cast<size_t>(i)] = it->second;
        }
    }
    out.corner_class_count = nclasses;

    // component ids in first-seen order
    std::map<int, int> comp_of_rep;
    out.cell_component.assign(static_cast<size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
        int r = comps.find(c);
        auto it = comp_of_rep.find(r);
        if (it == comp_of_rep.end()) {
            it = comp_of_rep.emplace(r, static_cast<int>(out.components.size())).first;
            out.components.push_back(Component{});
        }
        out.cell_component[static_cast<size_t>(c)] = it->second;
    }

    // faces, edges, boundary
    std::vector<char> corner_seen(static_cast<size_t>(nclasses), 0);
    std::vector<int> corner_comp(static_cast<size_t>(nclasses), -1);
    for (int c = 0; c < n; ++c) {
        int comp = out.cell_component[static_cast<size_t>(c)];
        auto& C = out.components[static_cast<size_t>(comp)];
        C.cells += 1;
        C.faces += 1;
        int m = cells_[static_cast<size_t>(c)];
        for (int s = 0; s < m; ++s) {
            int cc = out.corner_class[static_cast<size_t>(offset_[static_cast<size_t>(c)] + s)];
            if (!corner_seen[static_cast<size_t>(cc)]) {
                corner_seen[static_cast<size_t>(cc)] = 1;
                corner_comp[static_cast<size_t>(cc)] = comp;
                C.vertices += 1;
            }
            const auto& g = glue_[static_cast<size_t>(offset_[static_cast<size_t>(c)] + s)];
            if (!g) {
                C.edges += 1;
                C.closed = false;
            } else {
                // count each glued pair once
                size_t self = static_cast<size_t>(offset_[static_cast<size_t>(c)] + s);
                size_t other = static_cast<size_t>(offset_[static_cast<size_t>(g->other.cell)] + g->other.side);
                if (self < other) C.edges += 1;
            }
        }
    }

    // orientability: transport a sign; flip=true keeps the sign, flip=false negates
    std::vector<int> sign(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (sign[static_cast<size_t>(start)] != 0) continue;
        sign[static_cast<size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            int m = cells_[static_cast<size_t>(c)];
            for (int s = 0; s < m; ++s) {
                const auto& g = glue_[static_cast<size_t>(offset_[static_cast<size_t>(c)] + s)];
                if (!g) continue;
                int want = g->flip ? sign[static_cast<size_t>(c)] : -sign[static_cast<size_t>(c)];
                int& os = sign[static_cast<size_t>(g->other.cell)];
                if (os == 0) {
                    os = want;
                    stack.push_back(g->other.cell);
                } else if (os != want) {
                    out.components[static_cast<size_t>(out.cell_component[static_cast<size_t>(c)])].orientable = false;
                }
            }
        }
    }

    // boundary cycles: boundary sides joined through shared corner classes
    {
        std::vector<int> bsides;
        for (int i = 0; i < total_sides_; ++i)
            if (!glue_[static_cast<size_t>(i)]) bsides.push_back(i);
        if (!bsides.empty()) {
            std::map<int, int> side_index;
            for (size_t k = 0; k < bsides.size(); ++k) side_index[bsides[static_cast<size_t>(k)]] = static_cast<int>(k);
            UnionFind cyc(static_cast<int>(bsides.size()));
            // ends of boundary side i: its two corner classes
            std::map<int, std::vector<int>> by_corner;
            for (size_t k = 0; k < bsides.size(); ++k) {
                int gi = bsides[k];
                // recover (cell, side)
                int cell = 0;
                while (cell + 1 < n && offset_[static_cast<size_t>(cell + 1)] <= gi) ++cell;
                int s = gi - offset_[static_cast<size_t>(cell)];
                by_corner[out.corner_class[static_cast<size_t>(corner_id(cell, s))]].push_back(static_cast<int>(k));
                by_corner[out.corner_class[static_cast<size_t>(corner_id(cell, s + 1))]].push_back(static_cast<int>(k));
            }
            for (auto& [cc, lst] : by_corner)
                for (size_t k = 1; k < lst.size(); ++k) cyc.unite(lst[0], lst[k]);
            std::map<int, int> cycle_comp; // representative -> component
            for (size_t k = 0; k < bsides.size(); ++k) {
                int gi = bsides[k];
                int cell = 0;
                while (cell + 1 < n && offset_[static_cast<size_t>(cell + 1)] <= gi) ++cell;
                int rep = cyc.find(static_cast<int>(k));
                if (!cycle_comp.count(rep)) {
                    cycle_comp[rep] = out.cell_component[static_cast<size_t>(cell)];
                    out.components[static_cast<size_t>(out.cell_component[static_cast<size_t>(cell)])].boundary_cycles += 1;
                }
            }
        }
    }

    for (auto& C : out.components) C.euler = C.vertices - C.edges + C.faces;
    return out;
}

void SurfaceTriangulation::set_gluing(int tri, int edge, int tri2, int edge2, bool reversed) {
    if (tri < 0 || tri >= triangle_count() || tri2 < 0 || tri2 >= triangle_count() || edge < 0 || edge > 2 ||
        edge2 < 0 || edge2 > 2)
        throw std::invalid_argument("surface gluing out of range");
    auto& a = glue_[static_cast<size_t>(tri)][static_cast<size_t>(edge)];
    auto& b = glue_[static_cast<size_t>(tri2)][static_cast<size_t>(edge2)];
    if (tri == tri2 && edge == edge2) throw std::invalid_argument("surface edge glued to itself");
    if (a || b) throw std::invalid_argument("surface edge glued twice");
    a = SurfaceGluing{tri2, edge2, reversed};
    b = SurfaceGluing{tri, edge, reversed};
}

PolygonComplex SurfaceTriangulation::as_polygon_complex() const {
    PolygonComplex pc;
    for (int t = 0; t < triangle_count(); ++t) pc.add_cell(3);
    for (int t = 0; t < triangle_count(); ++t)
        for (int e = 0; e < 3; ++e) {
            const auto& g = gluing(t, e);
            if (!g) continue;
            if (g->tri > t || (g->tri == t && g->edge > e))
                pc.glue({t, e}, {g->tri, g->edge}, g->reversed);
        }
    return pc;
}

SurfaceTriangulation::Analysis SurfaceTriangulation::analyze() const {
    auto a = as_polygon_complex().analyze();
    Analysis out;
    out.components = static_cast<int>(a.components.size());
    out.connected = out.components <= 1;
    out.per_component = a.components;
    for (const auto& c : a.components) {
        out.euler += c.euler;
        out.closed = out.closed && c.closed;
        out.orientable = out.orientable && c.orientable;
        out.boundary_cycles += c.boundary_cycles;
    }
    return out;
}

SurfaceTriangulation surface_from_triples(const std::vector<std::array<int, 3>>& tris) {
    SurfaceTriangulation s(static_cast<int>(tris.size()));
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges; // sorted vertex pair -> (tri, edge)
    for (size_t t = 0; t < tris.size(); ++t) {
        const auto& T = tris[t];
        if (T[0] == T[1] || T[1] == T[2] || T[0] == T[2])
            throw std::invalid_argument("degenerate triangle in surface_from_triples");
        for (int e = 0; e < 3; ++e) {
            int u = T[static_cast<size_t>(e)], v = T[static_cast<size_t>((e + 1) % 3)];
            edges[{std::min(u, v), std::max(u, v)}].push_back({static_cast<int>(t), e});
        }
    }
    for (auto& [key, lst] : edges) {
        if (lst.size() > 2)
            throw std::invalid_argument("vertex pair shared by more than two triangles in surface_from_triples");
        if (lst.size() < 2) continue;
        auto [t1, e1] = lst[0];
        auto [t2, e2] = lst[1];
        int a1 = tris[static_cast<size_t>(t1)][static_cast<size_t>(e1)];
        int a2 = tris[static_cast<size_t>(t2)][static_cast<size_t>(e2)];
        // flip=false identifies corner e1 with corner e2; those corners carry
        // vertices a1 and a2, so the gluing is unflipped exactly when a1 == a2.
        s.set_gluing(t1, e1, t2, e2, a1 != a2);
    }
    return s;
}

} // namespace crosscap
