#include <doctest.h>

#include <algorithm>
#include <random>

#include <hsl/bspline.hpp>
#include <hsl/errors.hpp>
#include <hsl/splinespace.hpp>

#include "support/generators.hpp"

using namespace hsl;

namespace
{
    Grid2 unitGrid(int n)
    {
        std::vector<Rational> lines;
        for (int i = 0; i <= n; ++i)
            lines.push_back(Rational(i));
        return Grid2(lines, lines);
    }

    Domain2D rectAt(CellIndex x0, CellIndex y0, CellIndex w, CellIndex h)
    {
        std::vector<GridCell> cells;
        for (CellIndex x = x0; x < x0 + w; ++x)
            for (CellIndex y = y0; y < y0 + h; ++y)
                cells.push_back({x, y});
        return Domain2D({0, 0}, std::move(cells));
    }

    Domain2D shift(const Domain2D& dom, CellIndex dx, CellIndex dy)
    {
        std::vector<GridCell> cells;
        for (const GridCell& c : dom.cells)
            cells.push_back({c.x + dx, c.y + dy});
        return Domain2D(dom.parity, std::move(cells));
    }
}

TEST_CASE("two bilinear cells joined continuously")
{
    const Grid2 grid = unitGrid(12);
    const TMeshComplex mesh = singleLevelMesh(grid, rectAt(5, 5, 2, 1));
    const SmoothnessSystem sys = assembleSmoothnessSystem(mesh, 1, 1);
    CHECK(sys.rows.size() == 2);
    CHECK(dimensionOracle(mesh, 1, 1) == 6);
}

TEST_CASE("rectangles reproduce the closed form")
{
    const Grid2 grid = unitGrid(18);
    for (CellIndex a = 1; a <= 4; ++a)
        for (CellIndex b = 1; b <= 3; ++b)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 2; ++n)
                {
                    const TMeshComplex mesh = singleLevelMesh(grid, rectAt(7, 7, a, b));
                    CHECK(dimensionOracle(mesh, m, n) == (a + m) * (b + n));
                }
    const TMeshComplex mesh = singleLevelMesh(grid, rectAt(7, 7, 4, 3));
    CHECK(dimensionOracle(mesh, 2, 2) == 30);
}

TEST_CASE("a simply connected staircase matches the formula")
{
    const Domain2D stairs = shift(
        Domain2D({0, 0}, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}), 7, 7);
    const Grid2 grid = unitGrid(18);
    const long long viaFormula = dimensionFormula(2, 2, faceCounts(stairs));
    CHECK(dimensionOracle(singleLevelMesh(grid, stairs), 2, 2) == viaFormula);
}

TEST_CASE("degenerate strips reduce to the univariate count")
{
    for (CellIndex a = 1; a <= 5; ++a)
    {
        std::vector<CellIndex> run;
        for (CellIndex i = 0; i < a; ++i)
            run.push_back(i);
        const Domain1D strip1d(0, run);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
            {
                const FaceCounts fc = faceCounts(rectAt(7, 7, a, 1));
                CHECK(dimensionFormula(m, n, fc) == (n + 1) * splineSpaceDimension(m, strip1d));
            }
    }
}

TEST_CASE("hand-assembled hierarchical interface blocks")
{
    TMeshComplex mesh;
    mesh.cells.push_back(MeshCell{0, {0, 0}, Rational(0), Rational(1), Rational(0), Rational(1)});
    mesh.cells.push_back(MeshCell{1, {0, 0}, Rational(1), Rational(3, 2), Rational(0), Rational(1, 2)});
    mesh.cells.push_back(MeshCell{1, {0, 1}, Rational(1), Rational(3, 2), Rational(1, 2), Rational(1)});
    mesh.interfaces = buildInterfaces(mesh.cells);
    REQUIRE(mesh.interfaces.size() == 3);

    const SmoothnessSystem sys = assembleSmoothnessSystem(mesh, 1, 1);
    REQUIRE(sys.rows.size() == 6);
    REQUIRE(sys.unknowns == 12);

    RationalMatrix expected = RationalMatrix::Constant(6, 12, Rational(0));
    // x = 1, segment [0, 1/2]: trace of A meets trace of B.
    expected(0, 0) = 1; expected(0, 2) = 1; expected(0, 4) = -1;
    expected(1, 1) = 1; expected(1, 3) = 1; expected(1, 5) = -2;
    // x = 1, segment [1/2, 1]: trace of A meets trace of C.
    expected(2, 0) = 1; expected(2, 2) = 1; expected(2, 8) = -1; expected(2, 9) = 1;
    expected(3, 1) = 1; expected(3, 3) = 1; expected(3, 9) = -2;
    // y = 1/2, segment [1, 3/2]: trace of B meets trace of C.
    expected(4, 4) = 1; expected(4, 5) = 1; expected(4, 6) = -2; expected(4, 7) = -2;
    expected(4, 8) = -1; expected(4, 10) = 2;
    expected(5, 6) = 2; expected(5, 7) = 2; expected(5, 10) = -2;

    CHECK(sys.dense() == expected);
}

TEST_CASE("formula, enumeration and oracle agree on admissible domains")
{
    const Grid2 grid = unitGrid(26);
    testing::Rng rng(31415);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter)
    {
        const Domain2D dom = shift(testing::randomManifoldDomain(rng, 8), 9, 9);
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
            {
                if (!isAdmissible(dom, m - 1, n - 1))
                    continue;
                ++checked;
                const long long formula = dimensionFormula(m, n, faceCounts(dom));
                const long long keys = static_cast<long long>(enumerateActingKeys(m, n, dom, grid).size());
                const long long oracle = dimensionOracle(singleLevelMesh(grid, dom), m, n);
                CHECK(formula == keys);
                CHECK(formula == oracle);
            }
    }
    CHECK(checked > 40);
}

TEST_CASE("gap-1 negative control: enumeration undershoots, restriction loses rank")
{
    const Grid2 grid = unitGrid(26);
    const Domain2D gap({0, 0}, {{10, 10}, {12, 10}});
    const int m = 2, n = 1;

    const auto keys = enumerateActingKeys(m, n, gap, grid);
    const long long formula = dimensionFormula(m, n, faceCounts(gap));
    const long long oracle = dimensionOracle(singleLevelMesh(grid, gap), m, n);
    CHECK(static_cast<long long>(keys.size()) == 10);
    CHECK(formula == 12);
    CHECK(oracle == 12);
    CHECK(static_cast<long long>(keys.size()) != oracle);

    // Rank of the keys restricted to the domain (per-cell coefficients).
    std::vector<SparseRatRow> rows;
    const int perCell = (m + 1) * (n + 1);
    for (const BSplineKey& key : keys)
    {
        SparseRatRow row;
        for (std::size_t cellId = 0; cellId < gap.cells.size(); ++cellId)
        {
            const RationalMatrix piece = cellPolynomial(key, gap.cells[cellId], grid);
            for (int r = 0; r <= m; ++r)
                for (int s = 0; s <= n; ++s)
                    if (!piece(r, s).isZero())
                        row.emplace_back(static_cast<int>(cellId) * perCell + r * (n + 1) + s, piece(r, s));
        }
        rows.push_back(std::move(row));
    }
    const int restrictedRank = exactRank(rows);
    CHECK(restrictedRank < formula);
    CHECK(restrictedRank == 10);
}

TEST_CASE("splitting an admissible domain is dimension-additive")
{
    const Grid2 grid = unitGrid(26);
    testing::Rng rng(2025);
    int checked = 0;
    for (int iter = 0; iter < 60 || checked < 15; ++iter)
    {
        if (iter > 400)
            break;
        const int m = 1 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 2);
        const Domain2D dom = shift(testing::randomManifoldDomain(rng, 7), 10, 10);
        if (!isAdmissible(dom, m - 1, n - 1))
            continue;
        const auto box = dom.boundingBox();
        if (box.xmax == box.xmin)
            continue;
        const CellIndex at = box.xmin + 1 + static_cast<CellIndex>(rng() % (box.xmax - box.xmin));
        LineSplit split = splitByLine(dom, Axis::X, at);
        if (!isAdmissible(split.lower, m - 1, n - 1) || !isAdmissible(split.upper, m - 1, n - 1))
            continue;
        if (!admitsOffset(split.interface1d, n - 1))
            continue;
        ++checked;
        const long long whole = dimensionOracle(singleLevelMesh(grid, dom), m, n);
        const long long left = dimensionOracle(singleLevelMesh(grid, split.lower), m, n);
        const long long right = dimensionOracle(singleLevelMesh(grid, split.upper), m, n);
        const long long glue = m * splineSpaceDimension(n, split.interface1d);
        CHECK(whole == left + right - glue);
    }
    CHECK(checked >= 15);
}

TEST_CASE("rank does not depend on row or column order")
{
    testing::Rng rng(4096);
    for (int iter = 0; iter < 30; ++iter)
    {
        const int rows = 8, cols = 10;
        std::vector<SparseRatRow> sys;
        for (int r = 0; r < rows; ++r)
        {
            SparseRatRow row;
            for (int c = 0; c < cols; ++c)
                if (rng() % 3 == 0)
                    row.emplace_back(c, Rational(static_cast<long long>(rng() % 13) - 6,
                                                 1 + static_cast<long long>(rng() % 4)));
            sys.push_back(row);
        }
        const int base = exactRank(sys);

        std::vector<SparseRatRow> shuffled = sys;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(exactRank(shuffled) == base);

        std::vector<int> perm(cols);
        for (int c = 0; c < cols; ++c)
            perm[c] = c;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<SparseRatRow> permuted;
        for (const SparseRatRow& row : sys)
        {
            SparseRatRow out;
            for (const auto& [c, v] : row)
                out.emplace_back(perm[static_cast<std::size_t>(c)], v);
            std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            permuted.push_back(out);
        }
        CHECK(exactRank(permuted) == base);
    }
}

TEST_CASE("exact solve statuses")
{
    // Unique: x = 2, y = -1/2.
    std::vector<SparseRatRow> rows = {{{0, Rational(1)}, {1, Rational(2)}},
                                      {{0, Rational(1)}, {1, Rational(-2)}},
                                      {{0, Rational(2)}, {1, Rational(0)}}};
    std::vector<Rational> rhs = {Rational(1), Rational(3), Rational(4)};
    const auto unique = solveExact(rows, rhs, 2);
    REQUIRE(unique.status == ExactSolveResult::Status::Unique);
    CHECK(unique.solution[0] == Rational(2));
    CHECK(unique.solution[1] == Rational(-1, 2));

    const auto inconsistent = solveExact({{{0, Rational(1)}}, {{0, Rational(1)}}},
                                         {Rational(1), Rational(2)}, 1);
    CHECK(inconsistent.status == ExactSolveResult::Status::Inconsistent);

    const auto under = solveExact({{{0, Rational(1)}, {1, Rational(1)}}}, {Rational(1)}, 2);
    CHECK(under.status == ExactSolveResult::Status::Underdetermined);
}

TEST_CASE("the oracle refuses oversized systems")
{
    const Grid2 grid = unitGrid(26);
    const TMeshComplex mesh = singleLevelMesh(grid, rectAt(9, 9, 4, 4));
    CHECK_THROWS_AS(dimensionOracle(mesh, 2, 2, 100), SizeGuardError);
    CHECK_THROWS_AS(assembleSmoothnessSystem(TMeshComplex{{MeshCell{0, {0, 0}, Rational(0), Rational(1),
                                                                     Rational(0), Rational(1)}},
                                                          {MeshInterface{0, 0, Axis::X, Rational(1),
                                                                         Rational(1), Rational(1)}}},
                                             1, 1),
                    ConfigError);
}
