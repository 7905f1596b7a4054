#include <hsl/exactlinalg.hpp>

#include <hsl/errors.hpp>

namespace hsl
{
    namespace
    {
        void divideByContent(SparseIntRow& row)
        {
            if (row.empty())
                return;
            Integer g = 0;
            for (const auto& [col, value] : row)
            {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
                if (g == 1)
                    break;
            }
            if (sgn(row.front().second) < 0)
                g = -g;
            if (g == 1)
                return;
            for (auto& [col, value] : row)
                value /= g;
        }

        /// target = a * target - b * pivot, sparse-merged by column.
        SparseIntRow combine(const SparseIntRow& target, const Integer& a, const SparseIntRow& pivot,
                             const Integer& b)
        {
            SparseIntRow out;
            out.reserve(target.size() + pivot.size());
            std::size_t i = 0, j = 0;
            while (i < target.size() || j < pivot.size())
            {
                if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first))
                {
                    out.emplace_back(target[i].first, a * target[i].second);
                    ++i;
                }
                else if (i == target.size() || pivot[j].first < target[i].first)
                {
                    out.emplace_back(pivot[j].first, -b * pivot[j].second);
                    ++j;
                }
                else
                {
                    Integer v = a * target[i].second - b * pivot[j].second;
                    if (v != 0)
                        out.emplace_back(target[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            return out;
        }
    }

    SparseIntRow toIntegerRow(const SparseRatRow& row)
    {
        Integer lcm = 1;
        for (const auto& [col, value] : row)
            if (!value.isZero())
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.den().get_mpz_t());
        SparseIntRow out;
        out.reserve(row.size());
        for (const auto& [col, value] : row)
        {
            if (value.isZero())
                continue;
            out.emplace_back(col, value.num() * (lcm / value.den()));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        divideByContent(out);
        return out;
    }

    bool RowEliminator::addRow(SparseIntRow row)
    {
        while (!row.empty())
        {
            const int lead = row.front().first;
            const auto it = mPivots.find(lead);
            if (it == mPivots.end())
            {
                divideByContent(row);
                mPivots.emplace(lead, std::move(row));
                return true;
            }
            row = combine(row, it->second.front().second, it->second, row.front().second);
            divideByContent(row);
        }
        return false;
    }

    int exactRank(const std::vector<SparseRatRow>& rows)
    {
        RowEliminator elim;
        for (const SparseRatRow& row : rows)
            elim.addRow(toIntegerRow(row));
        return elim.rank();
    }

    ExactSolveResult solveExact(const std::vector<SparseRatRow>& rows, const std::vector<Rational>& rhs,
                                int unknowns)
    {
        if (rows.size() != rhs.size())
            throw ConfigError("system rows and right-hand sides differ in length");
        const int rhsCol = unknowns;
        RowEliminator elim;
        for (std::size_t r = 0; r < rows.size(); ++r)
        {
            SparseRatRow full = rows[r];
            if (!rhs[r].isZero())
                full.emplace_back(rhsCol, -rhs[r]);
            elim.addRow(toIntegerRow(full));
        }

        ExactSolveResult result;
        const auto& pivots = elim.pivotRows();
        if (pivots.count(rhsCol))
        {
            result.status = ExactSolveResult::Status::Inconsistent;
            return result;
        }
        if (static_cast<int>(pivots.size()) < unknowns)
        {
            result.status = ExactSolveResult::Status::Underdetermined;
            return result;
        }

        result.status = ExactSolveResult::Status::Unique;
        result.solution.assign(static_cast<std::size_t>(unknowns), Rational(0));
        // Pivot columns are exactly 0..unknowns-1 here; back-substitute.
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it)
        {
            const auto& [col, row] = *it;
            Rational acc(0);
            Rational diag(0);
            for (const auto& [c, v] : row)
            {
                if (c == col)
                    diag = Rational(v);
                else if (c == rhsCol)
                    acc -= Rational(v);   // row encodes sum a_c x_c - b = 0
                else
                    acc -= Rational(v) * result.solution[static_cast<std::size_t>(c)];
            }
            result.solution[static_cast<std::size_t>(col)] = acc / diag;
        }
        return result;
    }
}
