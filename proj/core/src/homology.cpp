#include "crosscap/homology.hpp"

#include <stdexcept>

#include "crosscap/smith.hpp"

namespace crosscap {

std::string to_string(const HomologyGroup& g) {
    if (g.trivial()) return "0";
    std::string out;
    if (g.rank == 1) out = "Z";
    if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
    for (const Int& d : g.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

ChainComplex chain_complex(const Triangulation& t, const Skeleton& sk) {
    for (char r : sk.edge_reversed_self)
        if (r) throw std::invalid_argument("chain_complex: an edge is identified with its own reversal");

    const long long V = sk.vertex_count();
    const long long E = sk.edge_count();
    const long long F = sk.face_count();
    const long long T = t.tet_count();

    ChainComplex c;
    c.dims = {V, E, F, T};
    c.boundary.assign(4, SparseIntMatrix());
    c.boundary[0] = SparseIntMatrix(0, V);

    auto& d1 = c.boundary[1] = SparseIntMatrix(V, E);
    for (long long e = 0; e < E; ++e) {
        const EdgeMember& rep = sk.edge_classes[static_cast<size_t>(e)].front();
        d1.add(sk.vertex_class_of(rep.tet, rep.v1), e, 1);
        d1.add(sk.vertex_class_of(rep.tet, rep.v0), e, -1);
    }

    auto& d2 = c.boundary[2] = SparseIntMatrix(E, F);
    for (long long f = 0; f < F; ++f) {
        const FaceMember& rep = sk.face_classes[static_cast<size_t>(f)].front();
        int w[3];
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != rep.face) w[k++] = v;
        // boundary of [w0 w1 w2] = [w1 w2] - [w0 w2] + [w0 w1]
        const int pair[3][2] = {{w[1], w[2]}, {w[0], w[2]}, {w[0], w[1]}};
        for (int s = 0; s < 3; ++s) {
            int sign = s == 1 ? -1 : 1;
            if (!sk.directed_edge_agrees(rep.tet, pair[s][0], pair[s][1])) sign = -sign;
            d2.add(sk.edge_class_of(rep.tet, pair[s][0], pair[s][1]), f, sign);
        }
    }

    auto& d3 = c.boundary[3] = SparseIntMatrix(F, T);
    for (long long i = 0; i < T; ++i) {
        for (int a = 0; a < 4; ++a) {
            int fc = sk.face_class_of(static_cast<int>(i), a);
            int sign = a % 2 == 0 ? 1 : -1;
            for (const FaceMember& m : sk.face_classes[static_cast<size_t>(fc)])
                if (m.tet == i && m.face == a && m.orientation_reversed) sign = -sign;
            d3.add(fc, i, sign);
        }
    }

    return c;
}

std::vector<HomologyGroup> homology(const ChainComplex& c) {
    const size_t n = c.dims.size();
    std::vector<DivisorSummary> s(n + 1);
    for (size_t k = 0; k < n; ++k) s[k] = elementary_divisors(c.boundary[k]);
    s[n] = DivisorSummary{}; // no incoming boundary above top degree

    std::vector<HomologyGroup> out(n);
    for (size_t k = 0; k < n; ++k) {
        out[k].rank = c.dims[k] - s[k].rank - s[k + 1].rank;
        out[k].torsion = s[k + 1].nontrivial;
        if (out[k].rank < 0) throw std::logic_error("homology: boundary ranks exceed chain dimension");
    }
    return out;
}

std::vector<HomologyGroup> homology(const Triangulation& t) {
    return homology(chain_complex(t, compute_skeleton(t)));
}

HomologyGroup first_homology(const Triangulation& t) { return homology(t)[1]; }

std::vector<long long> betti_mod2(const std::vector<HomologyGroup>& groups) {
    std::vector<long long> out(groups.size(), 0);
    for (size_t k = 0; k < groups.size(); ++k) {
        long long even = 0;
        for (const Int& d : groups[k].torsion)
            if (d % 2 == 0) ++even;
        out[k] += groups[k].rank + even;
        if (k + 1 < groups.size()) out[k + 1] += even;
    }
    return out;
}

} // namespace crosscap
