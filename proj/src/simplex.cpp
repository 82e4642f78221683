#include "dircut/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace dircut {

namespace {

constexpr double kReducedTol = 1e-7;  // entering threshold / infeasibility gate
constexpr double kPivotTol = 1e-9;    // treat smaller magnitudes as zero
constexpr int kPivotCap = 200000;

// Dense tableau over columns [original | surplus | artificial], rhs kept last.
struct Tableau {
    int n = 0;        // original variables
    int m = 0;        // constraint rows
    int width = 0;    // n + 2m columns plus trailing rhs
    std::vector<std::vector<double>> rows;
    std::vector<int> basis;
    std::vector<double> z;  // reduced costs per column
    double neg_obj = 0.0;   // z-row rhs, i.e. minus the current objective
    int pivots = 0;

    double rhs(int r) const { return rows[static_cast<size_t>(r)][static_cast<size_t>(width)]; }

    void pivot(int r, int c) {
        if (++pivots > kPivotCap) throw std::runtime_error("simplex pivot cap exceeded");
        std::vector<double>& prow = rows[static_cast<size_t>(r)];
        const double p = prow[static_cast<size_t>(c)];
        for (double& v : prow) v /= p;
        prow[static_cast<size_t>(c)] = 1.0;  // kill roundoff on the pivot itself
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            std::vector<double>& row = rows[static_cast<size_t>(i)];
            const double f = row[static_cast<size_t>(c)];
            if (f == 0.0) continue;
            for (int j = 0; j <= width; ++j)
                row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
            row[static_cast<size_t>(c)] = 0.0;
        }
        const double f = z[static_cast<size_t>(c)];
        if (f != 0.0) {
            for (int j = 0; j < width; ++j)
                z[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
            neg_obj -= f * prow[static_cast<size_t>(width)];
            z[static_cast<size_t>(c)] = 0.0;
        }
        basis[static_cast<size_t>(r)] = c;
    }

    // Reduced costs and objective for the given per-column cost vector.
    void load_costs(const std::vector<double>& cost) {
        z = cost;
        neg_obj = 0.0;
        for (int i = 0; i < m; ++i) {
            const double cb = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            if (cb == 0.0) continue;
            const std::vector<double>& row = rows[static_cast<size_t>(i)];
            for (int j = 0; j < width; ++j)
                z[static_cast<size_t>(j)] -= cb * row[static_cast<size_t>(j)];
            neg_obj -= cb * row[static_cast<size_t>(width)];
        }
    }

    // Lowest-index column with significantly negative reduced cost (Bland),
    // artificial columns barred. -1 when none.
    int entering() const {
        for (int j = 0; j < n + m; ++j)
            if (z[static_cast<size_t>(j)] < -kReducedTol) return j;
        return -1;
    }

    // Lexicographic ratio test: among rows that can host the pivot, the one
    // whose scaled [rhs | row] vector is lexicographically least (row index as
    // the final tie-break). -1 when the column is unbounded.
    int leaving(int c) const {
        int best = -1;
        for (int r = 0; r < m; ++r) {
            const double p = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (p <= kPivotTol) continue;
            if (best == -1) {
                best = r;
                continue;
            }
            const double bp = rows[static_cast<size_t>(best)][static_cast<size_t>(c)];
            double a = rhs(r) / p, b = rhs(best) / bp;
            if (a != b) {
                if (a < b) best = r;
                continue;
            }
            for (int j = 0; j < width; ++j) {
                a = rows[static_cast<size_t>(r)][static_cast<size_t>(j)] / p;
                b = rows[static_cast<size_t>(best)][static_cast<size_t>(j)] / bp;
                if (a != b) break;
            }
            if (a < b) best = r;
        }
        return best;
    }
};

}  // namespace

SimplexResult simplex_minimize(const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& rhs, const std::vector<double>& cost) {
    const int n = static_cast<int>(cost.size());
    const int m = static_cast<int>(rows.size());
    if (rhs.size() != rows.size()) throw std::invalid_argument("rhs size mismatch");

    Tableau t;
    t.n = n;
    t.m = m;
    t.width = n + 2 * m;
    t.rows.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(t.width) + 1, 0.0));
    t.basis.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("constraint row size mismatch");
        const double sign = rhs[static_cast<size_t>(i)] < 0.0 ? -1.0 : 1.0;
        std::vector<double>& row = t.rows[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            row[static_cast<size_t>(j)] = sign * rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        row[static_cast<size_t>(n + i)] = -sign;          // surplus
        row[static_cast<size_t>(n + m + i)] = 1.0;        // artificial
        row[static_cast<size_t>(t.width)] = sign * rhs[static_cast<size_t>(i)];
        t.basis[static_cast<size_t>(i)] = n + m + i;
    }

    // Phase 1: minimize the artificial total.
    std::vector<double> phase1(static_cast<size_t>(t.width), 0.0);
    for (int i = 0; i < m; ++i) phase1[static_cast<size_t>(n + m + i)] = 1.0;
    t.load_costs(phase1);
    for (int c = t.entering(); c != -1; c = t.entering()) {
        int r = t.leaving(c);
        if (r == -1) throw std::runtime_error("phase-1 column unbounded");  // cannot happen
        t.pivot(r, c);
    }
    SimplexResult result;
    result.pivots = t.pivots;
    if (-t.neg_obj > kReducedTol) {
        result.status = SimplexStatus::Infeasible;
        return result;
    }
    // Drive leftover zero-level artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
        if (t.basis[static_cast<size_t>(r)] < n + m) continue;
        for (int j = 0; j < n + m; ++j) {
            if (std::fabs(t.rows[static_cast<size_t>(r)][static_cast<size_t>(j)]) > kPivotTol) {
                t.pivot(r, j);
                break;
            }
        }
        // A row with no eligible pivot is redundant; its artificial stays
        // basic at value zero and never re-enters play.
    }

    // Phase 2: the real objective.
    std::vector<double> phase2(static_cast<size_t>(t.width), 0.0);
    for (int j = 0; j < n; ++j) phase2[static_cast<size_t>(j)] = cost[static_cast<size_t>(j)];
    t.load_costs(phase2);
    for (int c = t.entering(); c != -1; c = t.entering()) {
        int r = t.leaving(c);
        if (r == -1) {
            result.status = SimplexStatus::Unbounded;
            result.pivots = t.pivots;
            return result;
        }
        t.pivot(r, c);
    }

    result.status = SimplexStatus::Optimal;
    result.pivots = t.pivots;
    result.x.assign(static_cast<size_t>(n), 0.0);
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[static_cast<size_t>(r)];
        if (b < n) {
            double v = t.rhs(r);
            if (v < 0.0 && v > -kReducedTol) v = 0.0;  // scrub roundoff dust
            result.x[static_cast<size_t>(b)] = v;
        }
    }
    result.objective = 0.0;
    for (int j = 0; j < n; ++j)
        result.objective += cost[static_cast<size_t>(j)] * result.x[static_cast<size_t>(j)];
    result.duals.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double y = t.z[static_cast<size_t>(n + i)];
        if (y < 0.0 && y > -kReducedTol) y = 0.0;
        result.duals[static_cast<size_t>(i)] = y;
    }
    return result;
}

}  // namespace dircut
