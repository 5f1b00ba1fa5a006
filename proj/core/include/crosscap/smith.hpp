#pragma once

#include <vector>

#include "crosscap/matrix.hpp"

namespace crosscap {

/// Smith normal form with unimodular certificates: u * input * v == d, where
/// d is diagonal with nonnegative entries in a divisibility chain
/// d(0,0) | d(1,1) | ...
struct SmithDecomposition {
    IntMatrix u, d, v;

    /// positive diagonal entries, in chain order
    std::vector<Int> divisors() const;
    long long rank() const;
};

SmithDecomposition smith_normal_form(IntMatrix m);

/// Elementary divisors without the certificate, built for large sparse
/// matrices: entries of absolute value 1 are eliminated with unimodular row
/// and column operations (each splits off a trivial divisor), and the small
/// remaining core goes through the dense routine.
struct DivisorSummary {
    long long rank = 0;
    std::vector<Int> nontrivial; // divisors > 1, in chain order

    bool operator==(const DivisorSummary&) const = default;
};

DivisorSummary elementary_divisors(const SparseIntMatrix& m);

} // namespace crosscap
