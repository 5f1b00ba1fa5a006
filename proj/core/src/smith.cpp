#include "crosscap/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace crosscap {

std::vector<Int> SmithDecomposition::divisors() const {
    std::vector<Int> out;
    for (long long t = 0; t < std::min(d.rows(), d.cols()); ++t)
        if (d(t, t) != 0) out.push_back(d(t, t));
    return out;
}

long long SmithDecomposition::rank() const { return static_cast<long long>(divisors().size()); }

SmithDecomposition smith_normal_form(IntMatrix m) {
    const long long R = m.rows();
    const long long C = m.cols();
    IntMatrix u = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C);

    auto row_swap = [&](long long a, long long b) {
        if (a == b) return;
        for (long long c = 0; c < C; ++c) std::swap(m(a, c), m(b, c));
        for (long long c = 0; c < R; ++c) std::swap(u(a, c), u(b, c));
    };
    auto col_swap = [&](long long a, long long b) {
        if (a == b) return;
        for (long long r = 0; r < R; ++r) std::swap(m(r, a), m(r, b));
        for (long long r = 0; r < C; ++r) std::swap(v(r, a), v(r, b));
    };
    auto row_sub = [&](long long dst, long long src, const Int& f) { // row dst -= f * row src
        if (f == 0) return;
        for (long long c = 0; c < C; ++c) m(dst, c) -= f * m(src, c);
        for (long long c = 0; c < R; ++c) u(dst, c) -= f * u(src, c);
    };
    auto col_sub = [&](long long dst, long long src, const Int& f) {
        if (f == 0) return;
        for (long long r = 0; r < R; ++r) m(r, dst) -= f * m(r, src);
        for (long long r = 0; r < C; ++r) v(r, dst) -= f * v(r, src);
    };
    auto row_negate = [&](long long a) {
        for (long long c = 0; c < C; ++c) m(a, c) = -m(a, c);
        for (long long c = 0; c < R; ++c) u(a, c) = -u(a, c);
    };

    for (long long t = 0; t < std::min(R, C); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing submatrix into (t, t)
            long long pr = -1, pc = -1;
            for (long long r = t; r < R; ++r)
                for (long long c = t; c < C; ++c)
                    if (m(r, c) != 0 &&
                        (pr < 0 || boost::multiprecision::abs(m(r, c)) < boost::multiprecision::abs(m(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) {
                t = std::min(R, C); // all zero: done
                break;
            }
            row_swap(t, pr);
            col_swap(t, pc);

            // one pass of remainder reductions; leftovers shrink the pivot
            bool clean = true;
            for (long long r = t + 1; r < R; ++r) {
                if (m(r, t) == 0) continue;
                row_sub(r, t, m(r, t) / m(t, t));
                if (m(r, t) != 0) clean = false;
            }
            for (long long c = t + 1; c < C; ++c) {
                if (m(t, c) == 0) continue;
                col_sub(c, t, m(t, c) / m(t, t));
                if (m(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide everything that remains
            long long br = -1;
            for (long long r = t + 1; r < R && br < 0; ++r)
                for (long long c = t + 1; c < C; ++c)
                    if (m(r, c) % m(t, t) != 0) {
                        br = r;
                        break;
                    }
            if (br < 0) {
                if (m(t, t) < 0) row_negate(t);
                break;
            }
            row_sub(t, br, Int(-1)); // pull the offending row up, then keep reducing
        }
        if (t == std::min(R, C)) break;
    }

    return SmithDecomposition{std::move(u), std::move(m), std::move(v)};
}

namespace {

/// Working form for the sparse pass: live rows as ordered column -> value
/// maps plus, per column, the set of live rows touching it.
struct SparseWork {
    std::vector<std::map<long long, Int>> row;
    std::vector<std::set<long long>> col_rows;
    std::vector<char> row_alive, col_alive;

    explicit SparseWork(const SparseIntMatrix& m)
        : row(static_cast<size_t>(m.rows)),
          col_rows(static_cast<size_t>(m.cols)),
          row_alive(static_cast<size_t>(m.rows), 1),
          col_alive(static_cast<size_t>(m.cols), 1) {
        for (const auto& [r, c, v] : m.triplets) {
            auto& cell = row[static_cast<size_t>(r)][c];
            cell += v;
            if (cell == 0) row[static_cast<size_t>(r)].erase(c);
        }
        for (long long r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : row[static_cast<size_t>(r)]) col_rows[static_cast<size_t>(c)].insert(r);
    }
};

} // namespace

DivisorSummary elementary_divisors(const SparseIntMatrix& m) {
    SparseWork w(m);

    // candidate unit pivots; stale entries are filtered when popped
    std::set<std::pair<long long, long long>> units;
    for (long long r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : w.row[static_cast<size_t>(r)])
            if (v == 1 || v == -1) units.insert({r, c});

    long long unit_rank = 0;
    while (!units.empty()) {
        // cheapest live unit by Markowitz cost (fill-in bound); the scan is
        // capped, so selection stays cheap on large inputs
        std::pair<long long, long long> best{-1, -1};
        long long best_cost = -1;
        int scanned = 0;
        for (auto it = units.begin(); it != units.end();) {
            auto [r, c] = *it;
            auto& rr = w.row[static_cast<size_t>(r)];
            auto found = rr.find(c);
            if (!w.row_alive[static_cast<size_t>(r)] || !w.col_alive[static_cast<size_t>(c)] ||
                found == rr.end() || (found->second != 1 && found->second != -1)) {
                it = units.erase(it);
                continue;
            }
            long long cost = (static_cast<long long>(rr.size()) - 1) *
                             (static_cast<long long>(w.col_rows[static_cast<size_t>(c)].size()) - 1);
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best = *it;
            }
            ++it;
            if (best_cost == 0 || ++scanned >= 64) break;
        }
        if (best.first < 0) break;

        auto [pr, pc] = best;
        const Int pv = w.row[static_cast<size_t>(pr)].at(pc); // +-1
        std::vector<long long> touched(w.col_rows[static_cast<size_t>(pc)].begin(),
                                       w.col_rows[static_cast<size_t>(pc)].end());
        for (long long r2 : touched) {
            if (r2 == pr) continue;
            Int f = w.row[static_cast<size_t>(r2)].at(pc) * pv; // row r2 -= f * row pr
            for (const auto& [cc, vv] : w.row[static_cast<size_t>(pr)]) {
                auto& cell = w.row[static_cast<size_t>(r2)][cc];
                bool was_zero = cell == 0;
                cell -= f * vv;
                if (cell == 0) {
                    w.row[static_cast<size_t>(r2)].erase(cc);
                    w.col_rows[static_cast<size_t>(cc)].erase(r2);
                } else {
                    if (was_zero) w.col_rows[static_cast<size_t>(cc)].insert(r2);
                    if (cell == 1 || cell == -1) units.insert({r2, cc});
                }
            }
        }

        // retire the pivot row and column; they contribute a divisor of 1
        for (const auto& [cc, vv] : w.row[static_cast<size_t>(pr)]) w.col_rows[static_cast<size_t>(cc)].erase(pr);
        w.row[static_cast<size_t>(pr)].clear();
        w.row_alive[static_cast<size_t>(pr)] = 0;
        w.col_alive[static_cast<size_t>(pc)] = 0;
        ++unit_rank;
    }

    // dense core of whatever is left
    std::vector<long long> live_rows, live_cols;
    std::map<long long, long long> col_index;
    for (long long r = 0; r < m.rows; ++r)
        if (w.row_alive[static_cast<size_t>(r)] && !w.row[static_cast<size_t>(r)].empty()) live_rows.push_back(r);
    for (long long c = 0; c < m.cols; ++c)
        if (w.col_alive[static_cast<size_t>(c)] && !w.col_rows[static_cast<size_t>(c)].empty()) {
            col_index[c] = static_cast<long long>(live_cols.size());
            live_cols.push_back(c);
        }

    DivisorSummary out;
    out.rank = unit_rank;
    if (!live_rows.empty()) {
        IntMatrix core(static_cast<long long>(live_rows.size()), static_cast<long long>(live_cols.size()));
        for (size_t r = 0; r < live_rows.size(); ++r)
            for (const auto& [c, v] : w.row[static_cast<size_t>(live_rows[r])])
                core(static_cast<long long>(r), col_index.at(c)) = v;
        SmithDecomposition snf = smith_normal_form(std::move(core));
        for (const Int& d : snf.divisors()) {
            ++out.rank;
            if (d > 1) out.nontrivial.push_back(d);
        }
    }
    return out;
}

} // namespace crosscap
