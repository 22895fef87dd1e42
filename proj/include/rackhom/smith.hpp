/**
 * Smith normal form over the integers with exact arithmetic.
 *
 * For an m x n matrix M we find unimodular U (m x m) and V (n x n) with
 * U M V = D, D diagonal, d_1 | d_2 | ... and all d_i >= 0. The inverse of V
 * is maintained alongside V since homology needs both.
 *
 * Pivoting: the nonzero entry of least absolute value in the active block,
 * first in row-major order on ties. The result is a deterministic function
 * of the input.
 */
#ifndef RACKHOM_SMITH_HPP
#define RACKHOM_SMITH_HPP

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubical.hpp"

namespace rackhom {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = Matrix<Integer>;

struct SmithDecomposition
{
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;

    /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank.
    std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0)
                out.push_back(D(i, i));
        return out;
    }
};

/// Which transforms to accumulate. Skipping U or V saves time in homology.
struct SmithOptions
{
    bool track_rows = true;
    bool track_columns = true;
};

namespace detail {

class SmithReducer
{
public:
    SmithReducer(IntMatrix m, SmithOptions opt) : a_(std::move(m)), opt_(opt)
    {
        if (opt_.track_rows)
            u_ = IntMatrix::identity(a_.rows());
        if (opt_.track_columns)
        {
            v_ = IntMatrix::identity(a_.cols());
            vinv_ = IntMatrix::identity(a_.cols());
        }
    }

    void run()
    {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < limit; ++t)
        {
            auto pivot = smallest_in_block(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            reduce_pivot(t);
            if (a_(t, t) < 0)
                negate_row(t);
        }
    }

    IntMatrix& matrix() { return a_; }
    IntMatrix& u() { return u_; }
    IntMatrix& v() { return v_; }
    IntMatrix& v_inverse() { return vinv_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j)
            {
                const Integer& x = a_(i, j);
                if (x == 0)
                    continue;
                Integer ax = abs(x);
                if (!best || ax < best_abs)
                {
                    best = {i, j};
                    best_abs = std::move(ax);
                    if (best_abs == 1)
                        return best;
                }
            }
        return best;
    }

    // Clears row and column t and enforces divisibility of the rest by the
    // pivot.
    void reduce_pivot(std::size_t t)
    {
        for (;;)
        {
            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows(); ++i)
            {
                if (a_(i, t) == 0)
                    continue;
                Integer q = a_(i, t) / a_(t, t);
                if (q != 0)
                    add_row_multiple(i, t, -q);
                if (a_(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
            {
                if (a_(t, j) == 0)
                    continue;
                Integer q = a_(t, j) / a_(t, t);
                if (q != 0)
                    add_col_multiple(j, t, -q);
                if (a_(t, j) != 0)
                    clean = false;
            }
            if (!clean)
            {
                bring_smallest_remainder(t);
                continue;
            }
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < a_.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (a_(i, j) % a_(t, t) != 0)
                    {
                        offending = i;
                        break;
                    }
            if (!offending)
                return;
            add_row_multiple(t, *offending, Integer(1));
        }
    }

    void bring_smallest_remainder(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        Integer best = abs(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_(i, t) != 0 && abs(a_(i, t)) < best)
            {
                best = abs(a_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_(t, j) != 0 && abs(a_(t, j)) < best)
            {
                best = abs(a_(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    // row_target += k * row_source
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& k)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (a_(source, j) != 0)
                a_(target, j) += k * a_(source, j);
        if (opt_.track_rows)
            for (std::size_t j = 0; j < u_.cols(); ++j)
                if (u_(source, j) != 0)
                    u_(target, j) += k * u_(source, j);
    }

    // col_target += k * col_source; V^{-1} gets the inverse row operation.
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& k)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            if (a_(i, source) != 0)
                a_(i, target) += k * a_(i, source);
        if (opt_.track_columns)
        {
            for (std::size_t i = 0; i < v_.rows(); ++i)
                if (v_(i, source) != 0)
                    v_(i, target) += k * v_(i, source);
            for (std::size_t j = 0; j < vinv_.cols(); ++j)
                if (vinv_(target, j) != 0)
                    vinv_(source, j) -= k * vinv_(target, j);
        }
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k)
            return;
        for (std::size_t j = 0; j < a_.cols(); ++j)
            std::swap(a_(i, j), a_(k, j));
        if (opt_.track_rows)
            for (std::size_t j = 0; j < u_.cols(); ++j)
                std::swap(u_(i, j), u_(k, j));
    }

    void swap_cols(std::size_t j, std::size_t k)
    {
        if (j == k)
            return;
        for (std::size_t i = 0; i < a_.rows(); ++i)
            std::swap(a_(i, j), a_(i, k));
        if (opt_.track_columns)
        {
            for (std::size_t i = 0; i < v_.rows(); ++i)
                std::swap(v_(i, j), v_(i, k));
            for (std::size_t c = 0; c < vinv_.cols(); ++c)
                std::swap(vinv_(j, c), vinv_(k, c));
        }
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(i, j) = -a_(i, j);
        if (opt_.track_rows)
            for (std::size_t j = 0; j < u_.cols(); ++j)
                u_(i, j) = -u_(i, j);
    }

    IntMatrix a_;
    SmithOptions opt_;
    IntMatrix u_, v_, vinv_;
};

}   // namespace detail

/// Full decomposition; untracked transforms are left empty.
inline SmithDecomposition smith_normal_form(IntMatrix m, SmithOptions opt = {})
{
    detail::SmithReducer reducer(std::move(m), opt);
    reducer.run();
    return {std::move(reducer.u()), std::move(reducer.matrix()), std::move(reducer.v()),
            std::move(reducer.v_inverse())};
}

inline SmithDecomposition smith_normal_form(const Matrix<Coefficient>& m, SmithOptions opt = {})
{
    return smith_normal_form(m.cast<Integer>(), opt);
}

/// Determinant by fraction-free elimination (Bareiss). Square matrices only.
inline Integer determinant(IntMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k)
    {
        if (m(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

}   // namespace rackhom

#endif
