#pragma once
#include <map>
#include <utility>
#include <vector>

#include <hsl/rational.hpp>

namespace hsl
{
    /// Sparse row of integers, sorted by column, no zero entries.
    using SparseIntRow = std::vector<std::pair<int, Integer>>;
    /// Sparse row of rationals as produced by assembly code.
    using SparseRatRow = std::vector<std::pair<int, Rational>>;

    /// Clears denominators and divides out the content, preserving the
    /// row's span.
    SparseIntRow toIntegerRow(const SparseRatRow& row);

    /// Incremental exact row reduction over the integers: rows are combined
    /// by cross-multiplication and renormalized by their content, so no
    /// fractions ever appear and no precision is lost.
    class RowEliminator
    {
        public:
        /// Feeds one row; returns true when it was independent of the rows
        /// seen so far.
        bool addRow(SparseIntRow row);

        int rank() const { return static_cast<int>(mPivots.size()); }
        const std::map<int, SparseIntRow>& pivotRows() const { return mPivots; }

        private:
        std::map<int, SparseIntRow> mPivots;   // leading column -> row
    };

    int exactRank(const std::vector<SparseRatRow>& rows);

    struct ExactSolveResult
    {
        enum class Status
        {
            Unique,
            Underdetermined,
            Inconsistent
        };
        Status status = Status::Inconsistent;
        std::vector<Rational> solution;   // valid when Unique
    };

    /// Solves the (possibly over-determined) system given by rows over
    /// columns [0, unknowns) with right-hand sides, exactly.
    ExactSolveResult solveExact(const std::vector<SparseRatRow>& rows, const std::vector<Rational>& rhs,
                                int unknowns);
}
