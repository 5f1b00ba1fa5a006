#pragma once

#include <string>
#include <vector>

#include "crosscap/matrix.hpp"
#include "crosscap/skeleton.hpp"
#include "crosscap/triangulation.hpp"

namespace crosscap {

struct HomologyGroup {
    long long rank = 0;
    std::vector<Int> torsion; // divisibility chain, each entry > 1

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// "0", "Z", "Z^2 + Z/2 + Z/4", ...
std::string to_string(const HomologyGroup& g);

/// Integer chain complex; boundary[k] maps C_k to C_{k-1} (boundary[0] has
/// zero rows), dims[k] = rank of C_k.
struct ChainComplex {
    std::vector<long long> dims;
    std::vector<SparseIntMatrix> boundary;
};

/// Chain complex of the identified cell structure. Each edge class is
/// oriented along its least member, each face class by the ascending vertex
/// order of its least member. Throws if an edge is identified with its own
/// reversal (no consistent orientation exists).
ChainComplex chain_complex(const Triangulation& t, const Skeleton& sk);

/// Homology in every degree, via elementary divisors of the boundaries.
std::vector<HomologyGroup> homology(const ChainComplex& c);

std::vector<HomologyGroup> homology(const Triangulation& t);

/// First homology of a triangulation (degree 1 of the above).
HomologyGroup first_homology(const Triangulation& t);

/// Dimensions of H_k with mod-2 coefficients, from the integer groups by
/// universal coefficients: rank + even torsion here + even torsion one
/// degree down.
std::vector<long long> betti_mod2(const std::vector<HomologyGroup>& groups);

} // namespace crosscap
