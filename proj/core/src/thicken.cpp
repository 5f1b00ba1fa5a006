#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "crosscap/gadget.hpp"

namespace crosscap {

namespace {

// A prism over three columns, each column a (near, far) point pair, cut into
// three tetrahedra by the staircase that places each side quad's diagonal
// from the earlier column's near point to the later column's far point.
// Two prisms sharing a column pair therefore cut the shared quad the same
// way, so a face-matching soup glues them without further bookkeeping.
struct Soup {
    std::vector<std::array<long long, 4>> tets;
    std::vector<int> labels;

    void tet(long long a, long long b, long long c, long long d, int label) {
        tets.push_back({a, b, c, d});
        labels.push_back(label);
    }

    void prism(std::pair<long long, long long> c0, std::pair<long long, long long> c1,
               std::pair<long long, long long> c2, int label) {
        tet(c0.first, c1.first, c2.first, c2.second, label);
        tet(c0.first, c1.first, c1.second, c2.second, label);
        tet(c0.first, c0.second, c1.second, c2.second, label);
    }
};

} // namespace

ThickenedComplex thicken(const TwoComplex& k) {
    std::vector<std::vector<int>> orders(k.circles.size());
    for (size_t c = 0; c < k.circles.size(); ++c) {
        orders[c].resize(k.circles[c].pages.size());
        std::iota(orders[c].begin(), orders[c].end(), 0);
    }
    return thicken(k, orders);
}

ThickenedComplex thicken(const TwoComplex& k,
                         const std::vector<std::vector<int>>& circle_page_order) {
    if (circle_page_order.size() != k.circles.size())
        throw std::invalid_argument("need one page order per branching circle");
    for (size_t c = 0; c < k.circles.size(); ++c) {
        const auto& order = circle_page_order[c];
        std::vector<char> seen(k.circles[c].pages.size(), 0);
        if (order.size() != seen.size())
            throw std::invalid_argument("page order for circle " + k.circles[c].label +
                                        " must list each page exactly once");
        for (int x : order) {
            if (x < 0 || x >= static_cast<int>(seen.size()) || seen[static_cast<size_t>(x)])
                throw std::invalid_argument("page order for circle " + k.circles[c].label +
                                            " is not a permutation of its pages");
            seen[static_cast<size_t>(x)] = 1;
        }
    }

    // two soup points per piece-local vertex: a bottom and a top copy
    std::vector<long long> base(k.pieces.size());
    long long total = 0;
    for (size_t p = 0; p < k.pieces.size(); ++p) {
        base[p] = total;
        total += 2LL * k.pieces[p].vertex_count;
    }
    auto bottom = [&base](int p, int v) { return base[static_cast<size_t>(p)] + 2LL * v; };
    auto top = [&base](int p, int v) { return base[static_cast<size_t>(p)] + 2LL * v + 1; };

    Soup soup;

    // thicken each piece: a vertical prism per triangle, columns in local
    // vertex order so neighbouring prisms agree on their shared quad
    for (size_t p = 0; p < k.pieces.size(); ++p)
        for (auto tr : k.pieces[p].triangles) {
            std::sort(tr.begin(), tr.end());
            int pi = static_cast<int>(p);
            soup.prism({bottom(pi, tr[0]), top(pi, tr[0])}, {bottom(pi, tr[1]), top(pi, tr[1])},
                       {bottom(pi, tr[2]), top(pi, tr[2])}, pi);
        }

    // a solid-torus core per circle, built from three chunks, one per circle
    // edge; each chunk is a fanned 2k-gon disk times an interval, where the
    // 2k-gon's corners are the bottom and top copies of the k pages' rim
    // vertices in the chosen page order
    for (size_t c = 0; c < k.circles.size(); ++c) {
        const BranchingCircle& circle = k.circles[c];
        const auto& order = circle_page_order[c];
        const int pages = static_cast<int>(order.size());
        const int label = -1 - static_cast<int>(c);

        // at[i][corner]: the local rim vertex of ordered page i sitting over
        // that circle corner (torus rims attach reversed: r0,r1,r2 -> g0,g2,g1)
        std::vector<std::array<int, 3>> at(static_cast<size_t>(pages));
        std::vector<int> piece_of(static_cast<size_t>(pages));
        for (int i = 0; i < pages; ++i) {
            const auto [p, r] = circle.pages[static_cast<size_t>(order[static_cast<size_t>(i)])];
            piece_of[static_cast<size_t>(i)] = p;
            const auto& rim = k.pieces[static_cast<size_t>(p)].rims[static_cast<size_t>(r)];
            at[static_cast<size_t>(i)] =
                p == 0 ? std::array<int, 3>{rim[0], rim[1], rim[2]}
                       : std::array<int, 3>{rim[0], rim[2], rim[1]};
        }

        // column j of the disk over circle corner cc: pages contribute
        // alternating bottom and top copies around the 2k-gon
        auto column = [&](int j, int cc) {
            int i = j / 2;
            int v = at[static_cast<size_t>(i)][static_cast<size_t>(cc)];
            int p = piece_of[static_cast<size_t>(i)];
            return j % 2 == 0 ? bottom(p, v) : top(p, v);
        };

        for (int cc = 0; cc < 3; ++cc) {
            const int cn = (cc + 1) % 3;
            for (int j = 1; j + 1 < 2 * pages; ++j)
                soup.prism({column(0, cc), column(0, cn)}, {column(j, cc), column(j, cn)},
                           {column(j + 1, cc), column(j + 1, cn)}, label);
            // the chunk meets page i's slab in the quad over that page's rim
            // edge; the slab cut it along its local-order diagonal, the fan
            // along the circle-order one, and when the two differ a single
            // flip tetrahedron, whose four faces pair the two cuts, mends it
            for (int i = 0; i < pages; ++i) {
                int a = at[static_cast<size_t>(i)][static_cast<size_t>(cc)];
                int b = at[static_cast<size_t>(i)][static_cast<size_t>(cn)];
                int p = piece_of[static_cast<size_t>(i)];
                if (a > b) soup.tet(bottom(p, a), bottom(p, b), top(p, a), top(p, b), label);
            }
        }
    }

    ThickenedComplex out;
    out.tri = triangulation_from_tetrahedra(soup.tets);
    out.tet_piece = std::move(soup.labels);
    return out;
}

Triangulation build_gadget(const SatInstance& inst) {
    return double_triangulation(thicken(build_two_complex(inst)).tri);
}

Triangulation build_gadget(const SatInstance& inst,
                           const std::vector<std::vector<int>>& circle_page_order) {
    return double_triangulation(thicken(build_two_complex(inst), circle_page_order).tri);
}

} // namespace crosscap
