#include <set>
#include <stdexcept>

#include "crosscap/gadget.hpp"
#include "crosscap/union_find.hpp"

namespace crosscap {

namespace {

// Both piece templates are W x 4 cell grids; cell (x, y) splits along the
// (x,y)-(x+1,y+1) diagonal into
//   lower(x,y) = [(x,y), (x+1,y), (x+1,y+1)]
//   upper(x,y) = [(x,y), (x+1,y+1), (x,y+1)]
// listed counterclockwise in the chart. A hole is a removed lower triangle
// in row 1; its rim keeps the removed triangle's counterclockwise order.
// Holes sit 4 columns apart so no triangle touches two rims and no rim
// touches the grid's identified boundary.

constexpr int kRows = 4;
constexpr int kHoleRow = 1;

int hole_column(int hole) { return 2 + 4 * hole; }
int grid_width(int holes) { return 4 * holes + 2; }

struct GridSurface {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 3>> rims;
};

template <typename VertexId>
GridSurface grid_surface(int holes, int width, VertexId&& id, int flip_x = -1, int flip_y = -1) {
    std::set<int> removed;
    for (int h = 0; h < holes; ++h) removed.insert(hole_column(h));

    GridSurface s;
    for (int y = 0; y < kRows; ++y)
        for (int x = 0; x < width; ++x) {
            if (x == flip_x && y == flip_y) {
                s.triangles.push_back({id(x, y), id(x + 1, y), id(x, y + 1)});
                s.triangles.push_back({id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)});
                continue;
            }
            if (y != kHoleRow || !removed.count(x))
                s.triangles.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1)});
            s.triangles.push_back({id(x, y), id(x + 1, y + 1), id(x, y + 1)});
        }
    for (int h = 0; h < holes; ++h) {
        int x = hole_column(h);
        s.rims.push_back({id(x, kHoleRow), id(x + 1, kHoleRow), id(x + 1, kHoleRow + 1)});
    }
    return s;
}

/// Torus: both grid directions wrap.
GridSurface torus_with_holes(int holes) {
    const int w = grid_width(holes);
    auto id = [w](int x, int y) { return (y % kRows) * w + (x % w); };
    GridSurface s = grid_surface(holes, w, id);
    s.vertex_count = w * kRows;
    return s;
}

/// Projective plane: a rectangle with its boundary identified antipodally,
/// (x, y) ~ (w - x, 4 - y).
GridSurface projective_plane_with_holes(int holes) {
    const int w = grid_width(holes);
    std::vector<int> ids(static_cast<size_t>((w + 1) * (kRows + 1)), -1);
    auto slot = [w](int x, int y) { return static_cast<size_t>(y * (w + 1) + x); };
    int next = 0;
    for (int y = 0; y <= kRows; ++y)
        for (int x = 0; x <= w; ++x) {
            if (ids[slot(x, y)] >= 0) continue;
            ids[slot(x, y)] = next;
            if (x == 0 || x == w || y == 0 || y == kRows) ids[slot(w - x, kRows - y)] = next;
            ++next;
        }
    auto id = [&ids, slot](int x, int y) { return ids[slot(x, y)]; };
    // the antipodal map carries the diagonal of cell (w-1, 0) onto the
    // diagonal of cell (0, 3); splitting the former the other way keeps every
    // edge determined by its vertex pair
    GridSurface s = grid_surface(holes, w, id, w - 1, 0);
    s.vertex_count = next;
    return s;
}

Piece make_piece(PieceKind kind, int variable, std::string name, GridSurface g) {
    Piece p;
    p.kind = kind;
    p.variable = variable;
    p.name = std::move(name);
    p.vertex_count = g.vertex_count;
    p.triangles = std::move(g.triangles);
    p.rims = std::move(g.rims);
    return p;
}

} // namespace

TwoComplex build_two_complex(const SatInstance& inst) {
    const int n = inst.variable_count;
    const int m = inst.clause_count();
    if (n < 1 || m < 1)
        throw std::invalid_argument("the reduction needs at least one variable and one clause");
    for (const auto& clause : inst.clauses)
        for (int lit : clause)
            if (lit == 0 || lit > n || lit < -n)
                throw std::invalid_argument("clause literal out of range");

    TwoComplex k;
    k.instance = inst;
    k.pieces.push_back(
        make_piece(PieceKind::ProjectivePlane, 0, "P", projective_plane_with_holes(n + m)));

    std::vector<int> occurrences(static_cast<size_t>(2 * n + 1), 0);
    auto literal_slot = [n](int lit) { return static_cast<size_t>(lit > 0 ? lit : n - lit); };
    for (const auto& clause : inst.clauses)
        for (int lit : clause) ++occurrences[literal_slot(lit)];

    std::vector<int> literal_piece(static_cast<size_t>(2 * n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        literal_piece[literal_slot(i)] = static_cast<int>(k.pieces.size());
        k.pieces.push_back(make_piece(PieceKind::PositiveVariable, i,
                                      "F(u" + std::to_string(i) + ")",
                                      torus_with_holes(occurrences[literal_slot(i)] + 1)));
        literal_piece[literal_slot(-i)] = static_cast<int>(k.pieces.size());
        k.pieces.push_back(make_piece(PieceKind::NegativeVariable, i,
                                      "F(~u" + std::to_string(i) + ")",
                                      torus_with_holes(occurrences[literal_slot(-i)] + 1)));
    }

    // circles: rim 0 of each torus goes to its variable circle, the others to
    // clause circles in clause order
    for (int i = 1; i <= n; ++i) {
        BranchingCircle c;
        c.label = "u" + std::to_string(i);
        c.pages = {{0, i - 1}, {literal_piece[literal_slot(i)], 0}, {literal_piece[literal_slot(-i)], 0}};
        k.circles.push_back(std::move(c));
    }
    std::vector<int> next_rim(k.pieces.size(), 1);
    for (int j = 0; j < m; ++j) {
        BranchingCircle c;
        c.label = "c" + std::to_string(j + 1);
        c.pages.push_back({0, n + j});
        for (int lit : inst.clauses[static_cast<size_t>(j)]) {
            int p = literal_piece[literal_slot(lit)];
            c.pages.push_back({p, next_rim[static_cast<size_t>(p)]++});
        }
        k.circles.push_back(std::move(c));
    }

    // fuse rims onto circles: the plane rim is the circle; torus rims attach
    // orientation-reversingly, r0,r1,r2 -> g0,g2,g1
    k.piece_vertex_base.resize(k.pieces.size());
    int total = 0;
    for (size_t p = 0; p < k.pieces.size(); ++p) {
        k.piece_vertex_base[p] = total;
        total += k.pieces[p].vertex_count;
    }
    UnionFind uf(total);
    for (const auto& circle : k.circles) {
        const auto& anchor = k.pieces[0].rims[static_cast<size_t>(circle.pages[0].rim)];
        for (size_t pg = 1; pg < circle.pages.size(); ++pg) {
            const auto [p, r] = circle.pages[pg];
            const auto& rim = k.pieces[static_cast<size_t>(p)].rims[static_cast<size_t>(r)];
            int base = k.piece_vertex_base[static_cast<size_t>(p)];
            uf.unite(base + rim[0], anchor[0]);
            uf.unite(base + rim[1], anchor[2]);
            uf.unite(base + rim[2], anchor[1]);
        }
    }

    k.fused_vertex.assign(static_cast<size_t>(total), -1);
    std::vector<int> root_id(static_cast<size_t>(total), -1);
    int fused_count = 0;
    for (int v = 0; v < total; ++v) {
        int r = uf.find(v);
        if (root_id[static_cast<size_t>(r)] < 0) root_id[static_cast<size_t>(r)] = fused_count++;
        k.fused_vertex[static_cast<size_t>(v)] = root_id[static_cast<size_t>(r)];
    }
    k.vertex_count = fused_count;

    for (size_t p = 0; p < k.pieces.size(); ++p)
        for (const auto& tr : k.pieces[p].triangles) {
            k.triangles.push_back({k.fused(static_cast<int>(p), tr[0]),
                                   k.fused(static_cast<int>(p), tr[1]),
                                   k.fused(static_cast<int>(p), tr[2])});
            k.triangle_piece.push_back(static_cast<int>(p));
        }

    for (auto& circle : k.circles) {
        const auto& rim = k.pieces[0].rims[static_cast<size_t>(circle.pages[0].rim)];
        circle.vertices = {k.fused(0, rim[0]), k.fused(0, rim[1]), k.fused(0, rim[2])};
    }
    return k;
}

AssignmentWitness witness_surface(const SatInstance& inst, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != inst.variable_count)
        throw std::invalid_argument("assignment length does not match variable count");
    for (int j = 0; j < inst.clause_count(); ++j) {
        int count = clause_true_count(inst.clauses[static_cast<size_t>(j)], assignment);
        if (count != 1)
            throw std::invalid_argument("assignment is not one-in-three satisfying: clause " +
                                        std::to_string(j + 1) + " has " + std::to_string(count) +
                                        " true literals");
    }

    TwoComplex k = build_two_complex(inst);
    std::vector<char> selected(k.pieces.size(), 0);
    selected[0] = 1;
    for (size_t p = 1; p < k.pieces.size(); ++p) {
        bool value = assignment[static_cast<size_t>(k.pieces[p].variable) - 1];
        selected[p] = (k.pieces[p].kind == PieceKind::PositiveVariable) == value;
    }

    std::vector<std::array<int, 3>> tris;
    for (size_t t = 0; t < k.triangles.size(); ++t)
        if (selected[static_cast<size_t>(k.triangle_piece[t])]) tris.push_back(k.triangles[t]);

    AssignmentWitness w;
    w.assignment = assignment;
    w.surface = surface_from_triples(tris);
    auto analysis = w.surface.analyze();
    if (!analysis.closed || !analysis.connected)
        throw std::logic_error("witness surface failed to close up");
    w.euler_characteristic = analysis.euler;
    w.orientable = analysis.orientable;
    return w;
}

} // namespace crosscap
