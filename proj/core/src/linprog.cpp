#include "tobl/linprog.hpp"

#include <cstddef>
#include <cstdio>
#include <stdexcept>

namespace tobl {

namespace {

// Dense simplex tableau over rationals. Columns [0, n) are the caller's
// variables, columns [n, n+m) are phase-one artificials. The reduced-cost
// row is kept incrementally; Bland's rule (lowest eligible index, lowest
// basic index on ratio ties) makes every run terminating and deterministic.
class Tableau {
public:
    Tableau(const RMatrix& a, const RVector& b, std::size_t num_vars)
        : m_(a.size()), n_(num_vars), cols_(num_vars + a.size())
    {
        rows_.resize(m_);
        rhs_.resize(m_);
        basis_.resize(m_);
        row_sign_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            rows_[i].assign(n_ + m_, Rational(0));
            const bool flip = b[i] < 0;
            row_sign_[i] = flip ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j)
                rows_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            rhs_[i] = flip ? Rational(-b[i]) : b[i];
            rows_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    // Maximizes sum of -artificials from the all-artificial basis.
    // Returns true when the system is feasible (optimum zero).
    bool phase_one()
    {
        reduced_.assign(cols_, Rational(0));
        value_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[i][j].is_zero())
                    reduced_[j] += rows_[i][j];
            value_ -= rhs_[i];
        }
        iterate(cols_);
#ifdef TOBL_LP_TRACE
        std::fprintf(stderr, "phase1 done: %zu pivots (m=%zu n=%zu)\n", pivot_count_, m_, n_);
#endif
        return value_.is_zero();
    }

    // Farkas certificate for the original rows; valid only after a failed
    // phase one.
    RVector farkas() const
    {
        RVector y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            // Reduced cost of artificial i is -1 - z_i, so z_i = -1 - r.
            Rational z = Rational(-1) - reduced_[n_ + i];
            y[i] = row_sign_[i] > 0 ? Rational(-z) : z;
        }
        return y;
    }

    // Pivots leftover artificials out of the basis; rows that cannot be
    // cleared are redundant and get dropped.
    void drop_artificials()
    {
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            for (; j < n_; ++j)
                if (!rows_[i][j].is_zero())
                    break;
            if (j < n_) {
                pivot(i, j);
                ++i;
            }
            else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            }
        }
    }

    // Maximizes the given objective from the current feasible basis.
    // Returns false on unboundedness.
    bool phase_two(const RVector& objective)
    {
        reduced_.assign(cols_, Rational(0));
        value_ = 0;
        for (std::size_t j = 0; j < n_; ++j)
            reduced_[j] = objective[j];
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = objective[basis_[i]];
            if (cb.is_zero())
                continue;
            value_ += cb * rhs_[i];
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[i][j].is_zero())
                    reduced_[j] -= cb * rows_[i][j];
        }
        for (std::size_t i = 0; i < m_; ++i)
            reduced_[basis_[i]] = 0;
        return iterate(n_);
    }

    RVector solution() const
    {
        RVector x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                x[basis_[i]] = rhs_[i];
        return x;
    }

    const Rational& value() const { return value_; }

private:
    // Lexicographic tie-break for the ratio test: among rows tied on the
    // minimum ratio, prefer the one whose row, scaled by the entering-column
    // coefficient, is lexicographically smaller over the slack/artificial
    // block (the running basis inverse). Keeps degenerate runs short.
    bool row_lex_less(std::size_t a, std::size_t b, std::size_t enter) const
    {
        const Rational& ca = rows_[a][enter];
        const Rational& cb = rows_[b][enter];
        for (std::size_t k = n_; k < cols_; ++k) {
            Rational lhs = rows_[a][k] * cb;
            Rational rhs = rows_[b][k] * ca;
            if (lhs != rhs)
                return lhs < rhs;
        }
        return basis_[a] < basis_[b];
    }

    // Pivot loop over columns [0, col_limit). Dantzig's rule (most positive
    // reduced cost, lowest index on ties) until a degenerate streak, then
    // Bland's rule until the next improving pivot; the combination is
    // deterministic and cannot cycle. Returns false if unbounded.
    bool iterate(std::size_t col_limit)
    {
        constexpr std::size_t kDegenerateLimit = 64;
        std::size_t degenerate_streak = 0;
        for (;;) {
            std::size_t enter = col_limit;
            if (degenerate_streak < kDegenerateLimit) {
                for (std::size_t j = 0; j < col_limit; ++j)
                    if (reduced_[j] > 0 && (enter == col_limit || reduced_[j] > reduced_[enter]))
                        enter = j;
            }
            else {
                for (std::size_t j = 0; j < col_limit; ++j) {
                    if (reduced_[j] > 0) {
                        enter = j;
                        break;
                    }
                }
            }
            if (enter == col_limit)
                return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& coef = rows_[i][enter];
                if (coef <= 0)
                    continue;
                Rational ratio = rhs_[i] / coef;
                if (leave == m_ || ratio < best) {
                    leave = i;
                    best = ratio;
                }
                else if (ratio == best && row_lex_less(i, leave, enter)) {
                    leave = i;
                }
            }
            if (leave == m_)
                return false;
            if (rhs_[leave].is_zero())
                ++degenerate_streak;
            else
                degenerate_streak = 0;
            pivot(leave, enter);
#ifdef TOBL_LP_TRACE
            if (++pivot_count_ % 50 == 0) {
                std::size_t bits = 0, nnz = 0;
                for (const auto& row : rows_)
                    for (const auto& v : row)
                        if (!v.is_zero()) { ++nnz; bits += numerator(v).str().size(); }
                std::fprintf(stderr, "pivot %zu nnz=%zu avgdigits=%.1f\n", pivot_count_,
                             nnz, nnz ? double(bits) / double(nnz) : 0.0);
            }
#endif
        }
    }

    void pivot(std::size_t pr, std::size_t pc)
    {
        RVector& prow = rows_[pr];
        const Rational inv = Rational(1) / prow[pc];
        if (inv != 1) {
            for (auto& v : prow)
                if (!v.is_zero())
                    v *= inv;
            rhs_[pr] *= inv;
        }
        prow[pc] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == pr)
                continue;
            Rational f = rows_[i][pc];
            if (f.is_zero())
                continue;
            RVector& row = rows_[i];
            for (std::size_t j = 0; j < prow.size(); ++j)
                if (!prow[j].is_zero())
                    row[j] -= f * prow[j];
            row[pc] = 0;
            if (!rhs_[pr].is_zero())
                rhs_[i] -= f * rhs_[pr];
        }
        if (!reduced_.empty()) {
            Rational f = reduced_[pc];
            if (!f.is_zero()) {
                for (std::size_t j = 0; j < prow.size(); ++j)
                    if (!prow[j].is_zero())
                        reduced_[j] -= f * prow[j];
                reduced_[pc] = 0;
                if (!rhs_[pr].is_zero())
                    value_ += f * rhs_[pr];
            }
        }
        basis_[pr] = pc;
    }

#ifdef TOBL_LP_TRACE
    std::size_t pivot_count_ = 0;
#endif
    std::size_t m_;
    std::size_t n_;
    std::size_t cols_;  // n_ + original row count; fixed even if rows drop
    RMatrix rows_;
    RVector rhs_;
    RVector reduced_;
    Rational value_;
    std::vector<std::size_t> basis_;
    std::vector<int> row_sign_;
};

void check_shape(const RVector& objective, const RMatrix& a, const RVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("constraint matrix and rhs row counts differ");
    for (const auto& row : a)
        if (row.size() != objective.size())
            throw std::invalid_argument("constraint row width differs from variable count");
}

}  // namespace

LpOutcome solve(const LinearProgram& lp)
{
    check_shape(lp.objective, lp.constraints, lp.rhs);
    Tableau t(lp.constraints, lp.rhs, lp.num_vars());
    if (!t.phase_one()) {
        RVector y = t.farkas();
        if (!check_farkas(lp.constraints, lp.rhs, y))
            throw std::logic_error("internal error: invalid Farkas certificate");
        return LpInfeasible{std::move(y)};
    }
    t.drop_artificials();
    if (!t.phase_two(lp.objective))
        return LpUnbounded{};
    RVector x = t.solution();
    if (!check_solution(lp.constraints, lp.rhs, x))
        throw std::logic_error("internal error: optimal point violates constraints");
    return LpOptimal{t.value(), std::move(x)};
}

FeasibilityOutcome feasible(const RMatrix& constraints, const RVector& rhs)
{
    const std::size_t n = constraints.empty() ? 0 : constraints[0].size();
    RVector zeros(n, Rational(0));
    check_shape(zeros, constraints, rhs);
    Tableau t(constraints, rhs, n);
    if (!t.phase_one()) {
        RVector y = t.farkas();
        if (!check_farkas(constraints, rhs, y))
            throw std::logic_error("internal error: invalid Farkas certificate");
        return LpInfeasible{std::move(y)};
    }
    RVector x = t.solution();
    if (!check_solution(constraints, rhs, x))
        throw std::logic_error("internal error: feasible point violates constraints");
    return FeasiblePoint{std::move(x)};
}

bool check_solution(const RMatrix& constraints, const RVector& rhs, const RVector& x)
{
    for (const auto& v : x)
        if (v < 0)
            return false;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!constraints[i][j].is_zero() && !x[j].is_zero())
                acc += constraints[i][j] * x[j];
        if (acc != rhs[i])
            return false;
    }
    return true;
}

bool check_farkas(const RMatrix& constraints, const RVector& rhs, const RVector& y)
{
    if (y.size() != constraints.size())
        return false;
    const std::size_t n = constraints.empty() ? 0 : constraints[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < constraints.size(); ++i)
            if (!y[i].is_zero() && !constraints[i][j].is_zero())
                acc += y[i] * constraints[i][j];
        if (acc > 0)
            return false;
    }
    Rational yb(0);
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (!y[i].is_zero())
            yb += y[i] * rhs[i];
    return yb > 0;
}

}  // namespace tobl
