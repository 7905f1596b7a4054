#include <hsl/bspline.hpp>

#include <algorithm>
#include <set>

#include <hsl/errors.hpp>

namespace hsl
{
    std::vector<Rational> knotVector(const BSplineKey& key, Axis a, const Grid2& grid)
    {
        const int degree = a == Axis::X ? key.degreeX : key.degreeY;
        const CellIndex start = a == Axis::X ? key.i : key.j;
        std::vector<Rational> knots;
        knots.reserve(static_cast<std::size_t>(degree) + 2);
        for (int t = 0; t <= degree + 1; ++t)
            knots.push_back(grid.line(a, start + t));
        return knots;
    }

    Rational bsplineValue(const std::vector<Rational>& knots, const Rational& x)
    {
        const int d = static_cast<int>(knots.size()) - 2;
        if (x < knots.front() || x >= knots.back())
            return Rational(0);
        std::vector<Rational> values(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int j = 0; j <= d; ++j)
            values[static_cast<std::size_t>(j)] = (knots[j] <= x && x < knots[j + 1]) ? Rational(1) : Rational(0);
        for (int k = 1; k <= d; ++k)
            for (int j = 0; j + k <= d; ++j)
            {
                const Rational left = (x - knots[j]) / (knots[j + k] - knots[j]);
                const Rational right = (knots[j + k + 1] - x) / (knots[j + k + 1] - knots[j + 1]);
                values[j] = left * values[j] + right * values[j + 1];
            }
        return values[0];
    }

    std::vector<RationalVector> bsplinePieces(const std::vector<Rational>& knots)
    {
        const int d = static_cast<int>(knots.size()) - 2;
        const int spans = d + 1;
        // pieces[j][s] = polynomial of N_{j,k} on span s (global coordinate).
        auto zeroRow = [&] { return std::vector<RationalVector>(spans, RationalVector::Constant(d + 1, Rational(0))); };
        std::vector<std::vector<RationalVector>> cur(static_cast<std::size_t>(spans), zeroRow());
        for (int j = 0; j < spans; ++j)
            cur[j][j](0) = Rational(1);
        for (int k = 1; k <= d; ++k)
        {
            std::vector<std::vector<RationalVector>> next(static_cast<std::size_t>(spans - k), zeroRow());
            for (int j = 0; j + k <= d; ++j)
            {
                const Rational dl = knots[j + k] - knots[j];
                const Rational dr = knots[j + k + 1] - knots[j + 1];
                for (int s = j; s <= j + k; ++s)
                {
                    RationalVector piece = RationalVector::Constant(d + 1, Rational(0));
                    // (x - t_j)/dl * N_{j,k-1} + (t_{j+k+1} - x)/dr * N_{j+1,k-1}
                    auto acc = [&](const RationalVector& p, const Rational& c0, const Rational& c1) {
                        for (Eigen::Index i = 0; i < p.size(); ++i)
                        {
                            piece(i) += p(i) * c0;
                            if (i + 1 <= d)
                                piece(i + 1) += p(i) * c1;
                        }
                    };
                    acc(cur[j][s], -knots[j] / dl, Rational(1) / dl);
                    acc(cur[j + 1][s], knots[j + k + 1] / dr, Rational(-1) / dr);
                    next[j][s] = std::move(piece);
                }
            }
            cur = std::move(next);
        }
        return cur[0];
    }

    Rational evaluate(const BSplineKey& key, const Rational& x, const Rational& y, const Grid2& grid)
    {
        checkDegrees(key.degreeX, key.degreeY);
        const Rational vx = bsplineValue(knotVector(key, Axis::X, grid), x);
        if (vx.isZero())
            return Rational(0);
        const Rational vy = bsplineValue(knotVector(key, Axis::Y, grid), y);
        return vx * vy;
    }

    RationalMatrix cellPolynomial(const BSplineKey& key, const GridCell& cell, const Grid2& grid)
    {
        checkDegrees(key.degreeX, key.degreeY);
        if (!grid.cellInWindow(cell))
            throw WindowError("cell outside the stored grid window");
        const int m = key.degreeX, n = key.degreeY;
        if (cell.x < key.i || cell.x > key.i + m || cell.y < key.j || cell.y > key.j + n)
            return RationalMatrix::Constant(m + 1, n + 1, Rational(0));

        const auto spanPoly = [&](Axis a, CellIndex span) {
            const auto pieces = bsplinePieces(knotVector(key, a, grid));
            const CellIndex start = a == Axis::X ? key.i : key.j;
            const RationalVector& global = pieces[static_cast<std::size_t>(span - start)];
            const Rational lo = grid.line(a, span);
            const Rational width = grid.line(a, span + 1) - lo;
            return composeAffine(global, lo, width);
        };
        const RationalVector cx = spanPoly(Axis::X, cell.x);
        const RationalVector cy = spanPoly(Axis::Y, cell.y);
        return cx * cy.transpose();
    }

    RationalMatrix cellPolynomialInterpolated(const BSplineKey& key, const GridCell& cell, const Grid2& grid)
    {
        checkDegrees(key.degreeX, key.degreeY);
        if (!grid.cellInWindow(cell))
            throw WindowError("cell outside the stored grid window");
        const int m = key.degreeX, n = key.degreeY;
        const Rational x0 = grid.line(Axis::X, cell.x);
        const Rational w = grid.line(Axis::X, cell.x + 1) - x0;
        const Rational y0 = grid.line(Axis::Y, cell.y);
        const Rational h = grid.line(Axis::Y, cell.y + 1) - y0;

        std::vector<Rational> us, vs;
        for (int r = 0; r <= m; ++r)
            us.push_back(Rational(r + 1, m + 2));
        for (int s = 0; s <= n; ++s)
            vs.push_back(Rational(s + 1, n + 2));

        RationalMatrix samples(m + 1, n + 1);
        for (int r = 0; r <= m; ++r)
            for (int s = 0; s <= n; ++s)
                samples(r, s) = evaluate(key, x0 + w * us[r], y0 + h * vs[s], grid);

        // Solve the two univariate Vandermonde systems exactly.
        auto solveVandermonde = [](const std::vector<Rational>& nodes, RationalVector rhs) {
            const int sz = static_cast<int>(nodes.size());
            RationalMatrix a(sz, sz);
            for (int r = 0; r < sz; ++r)
                for (int c = 0; c < sz; ++c)
                    a(r, c) = pow(nodes[r], c);
            // Plain elimination; the matrix is tiny and nonsingular.
            for (int col = 0; col < sz; ++col)
            {
                int pivot = col;
                while (a(pivot, col).isZero())
                    ++pivot;
                if (pivot != col)
                {
                    a.row(pivot).swap(a.row(col));
                    std::swap(rhs(pivot), rhs(col));
                }
                for (int r = col + 1; r < sz; ++r)
                {
                    const Rational f = a(r, col) / a(col, col);
                    if (f.isZero())
                        continue;
                    for (int c = col; c < sz; ++c)
                        a(r, c) -= f * a(col, c);
                    rhs(r) -= f * rhs(col);
                }
            }
            RationalVector x = RationalVector::Constant(sz, Rational(0));
            for (int r = sz - 1; r >= 0; --r)
            {
                Rational acc = rhs(r);
                for (int c = r + 1; c < sz; ++c)
                    acc -= a(r, c) * x(c);
                x(r) = acc / a(r, r);
            }
            return x;
        };

        // First per sample column in u, then across in v.
        RationalMatrix partial(m + 1, n + 1);
        for (int s = 0; s <= n; ++s)
            partial.col(s) = solveVandermonde(us, samples.col(s));
        RationalMatrix coeffs(m + 1, n + 1);
        for (int r = 0; r <= m; ++r)
            coeffs.row(r) = solveVandermonde(vs, partial.row(r).transpose()).transpose();
        return coeffs;
    }

    std::vector<BSplineKey> enumerateActingKeys(int m, int n, const Domain2D& dom, const Grid2& grid, int level)
    {
        checkDegrees(m, n);
        std::vector<BSplineKey> keys;
        if (dom.empty())
            return keys;
        const auto box = dom.boundingBox();
        if (box.xmin < m + 1 || box.xmax > grid.cellCount(Axis::X) - m - 2 || box.ymin < n + 1 ||
            box.ymax > grid.cellCount(Axis::Y) - n - 2)
            throw WindowError("stored grid window leaves less than degree+1 cells of margin");

        std::set<std::pair<CellIndex, CellIndex>> origins;
        for (const GridCell& c : dom.cells)
            for (CellIndex i = c.x - m; i <= c.x; ++i)
                for (CellIndex j = c.y - n; j <= c.y; ++j)
                    origins.insert({i, j});
        keys.reserve(origins.size());
        for (const auto& [i, j] : origins)
            keys.push_back(BSplineKey{level, i, j, m, n});
        std::sort(keys.begin(), keys.end());
        return keys;
    }
}
