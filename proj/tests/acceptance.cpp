// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no arguments for all criteria or with a single number to run one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <hsl/bspline.hpp>
#include <hsl/hierarchy.hpp>
#include <hsl/splinespace.hpp>

#include "support/hierarchies.hpp"
#include "support/oracles.hpp"

using namespace hsl;
using namespace hsl::testing;

namespace
{
    struct Criterion
    {
        int number;
        std::string summary;
        std::function<bool(std::string&)> run;
    };

    Grid2 unitGrid(int n)
    {
        std::vector<Rational> lines;
        for (int i = 0; i <= n; ++i)
            lines.push_back(Rational(i));
        return Grid2(lines, lines);
    }

    Domain2D shift(const Domain2D& dom, CellIndex dx, CellIndex dy)
    {
        std::vector<GridCell> cells;
        for (const GridCell& c : dom.cells)
            cells.push_back({c.x + dx, c.y + dy});
        return Domain2D(dom.parity, std::move(cells));
    }

    /// Manifold domains in a 10x10 window, with holes and ragged shapes.
    Domain2D sampleWindowDomain(Rng& rng)
    {
        const int kind = static_cast<int>(rng() % 3);
        if (kind == 0)
            return randomManifoldDomain(rng, 10, 3);
        if (kind == 1)
            return randomSoupDomain(rng, 10, 0.55);
        // Rectangle with a punched hole.
        for (;;)
        {
            const CellIndex w = 5 + static_cast<CellIndex>(rng() % 6);
            const CellIndex h = 5 + static_cast<CellIndex>(rng() % 6);
            const CellIndex hw = 1 + static_cast<CellIndex>(rng() % (w - 3));
            const CellIndex hh = 1 + static_cast<CellIndex>(rng() % (h - 3));
            const CellIndex hx = 1 + static_cast<CellIndex>(rng() % (w - hw - 1));
            const CellIndex hy = 1 + static_cast<CellIndex>(rng() % (h - hh - 1));
            std::vector<GridCell> cells;
            for (CellIndex x = 0; x < w; ++x)
                for (CellIndex y = 0; y < h; ++y)
                    if (!(x >= hx && x < hx + hw && y >= hy && y < hy + hh))
                        cells.push_back({x, y});
            Domain2D dom({0, 0}, std::move(cells));
            if (isManifold(dom))
                return dom;
        }
    }

    bool criterion1(std::string& detail)
    {
        const Grid2 grid = unitGrid(30);
        Rng rng(101);
        const int quota = 200;
        long long failures = 0, generated = 0;
        int done[4][4] = {};
        auto allDone = [&] {
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n)
                    if (done[m][n] < quota)
                        return false;
            return true;
        };
        while (!allDone() && generated < 20000)
        {
            ++generated;
            const Domain2D dom = shift(sampleWindowDomain(rng), 10, 10);
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n)
                {
                    if (done[m][n] >= quota || !isAdmissible(dom, m - 1, n - 1))
                        continue;
                    ++done[m][n];
                    const long long formula = dimensionFormula(m, n, faceCounts(dom));
                    const long long keys =
                        static_cast<long long>(enumerateActingKeys(m, n, dom, grid).size());
                    const long long oracle = dimensionOracle(singleLevelMesh(grid, dom), m, n);
                    if (formula != keys || keys != oracle)
                        ++failures;
                }
        }
        long long total = 0;
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                total += done[m][n];
        detail = std::to_string(total) + " admissible (domain, degree) checks over " +
                 std::to_string(generated) + " domains, " + std::to_string(failures) + " disagreements";
        return failures == 0 && allDone();
    }

    bool criterion2(std::string& detail)
    {
        bool ok = true;
        // Univariate gap-1 fixture, degree 2.
        const Domain1D gap1d(0, {0, 2});
        const long long starts = static_cast<long long>(effectiveBsplineStarts(2, gap1d).size());
        const long long dim1d = splineSpaceDimension(2, gap1d);
        ok = ok && starts == 5 && dim1d == 6;

        // Bivariate gap-1 fixture at bi-degree (2,1).
        const Grid2 grid = unitGrid(26);
        const Domain2D gap2d({0, 0}, {{10, 10}, {12, 10}});
        const auto keys = enumerateActingKeys(2, 1, gap2d, grid);
        const long long oracle = dimensionOracle(singleLevelMesh(grid, gap2d), 2, 1);
        const long long formula = dimensionFormula(2, 1, faceCounts(gap2d));
        ok = ok && keys.size() == 10 && oracle == 12 && formula == 12;

        // Restricted B-splines lose rank on the non-admissible domain.
        std::vector<SparseRatRow> rows;
        for (const BSplineKey& key : keys)
        {
            SparseRatRow row;
            for (std::size_t cellId = 0; cellId < gap2d.cells.size(); ++cellId)
            {
                const RationalMatrix piece = cellPolynomial(key, gap2d.cells[cellId], grid);
                for (int r = 0; r <= 2; ++r)
                    for (int s = 0; s <= 1; ++s)
                        if (!piece(r, s).isZero())
                            row.emplace_back(static_cast<int>(cellId) * 6 + r * 2 + s, piece(r, s));
            }
            rows.push_back(std::move(row));
        }
        const int restricted = exactRank(rows);
        ok = ok && restricted == 10 && restricted < formula;
        detail = "1D: 5 supports vs dim 6; 2D: 10 supports vs dim 12; restricted rank " +
                 std::to_string(restricted) + " < 12";
        return ok;
    }

    bool criterion3(std::string& detail)
    {
        Rng rng(303);
        long long disagreements = 0, checks = 0;
        for (int iter = 0; iter < 2000; ++iter)
        {
            const Domain2D dom =
                (iter % 2 == 0) ? randomSoupDomain(rng, 8, 0.5) : randomManifoldDomain(rng, 10, 3);
            for (int k1 = 1; k1 <= 3; ++k1)
                for (int k2 = 1; k1 + k2 <= 4; ++k2)
                {
                    ++checks;
                    if (isAdmissible(dom, k1, k2, OffsetRoute::ReduceK1) !=
                        isAdmissible(dom, k1, k2, OffsetRoute::ReduceK2))
                        ++disagreements;
                }
        }
        detail = std::to_string(checks) + " route comparisons on 2000 domains, " +
                 std::to_string(disagreements) + " disagreements";
        return disagreements == 0;
    }

    bool criterion4(std::string& detail)
    {
        Rng rng(404);
        long long mismatches = 0;
        long long perPair[5][5] = {};
        for (int iter = 0; iter < 1200; ++iter)
        {
            const Domain2D dom = sampleWindowDomain(rng);
            const FaceCounts fc = faceCounts(dom);
            for (int k1 = 0; k1 <= 4; ++k1)
                for (int k2 = 0; k1 + k2 <= 4; ++k2)
                {
                    if (!isAdmissible(dom, k1, k2))
                        continue;
                    ++perPair[k1][k2];
                    if (!(dilatedFaceCounts(fc, k1, k2) == faceCounts(dilate(dom, k1, k2))))
                        ++mismatches;
                }
        }
        long long minHits = perPair[0][0], total = 0;
        for (int k1 = 0; k1 <= 4; ++k1)
            for (int k2 = 0; k1 + k2 <= 4; ++k2)
            {
                minHits = std::min(minHits, perPair[k1][k2]);
                total += perPair[k1][k2];
            }
        detail = std::to_string(total) + " admissible (domain, order) checks, min " +
                 std::to_string(minHits) + " per order, " + std::to_string(mismatches) + " mismatches";
        return mismatches == 0 && minHits >= 50;
    }

    bool criterion5(std::string& detail)
    {
        Rng rng(505);
        long long domainChecks = 0, domainFailures = 0;
        while (domainChecks < 500)
        {
            const Domain2D dom = sampleWindowDomain(rng);
            const int k1 = static_cast<int>(rng() % 3), k2 = static_cast<int>(rng() % 3);
            const bool tilde = (rng() & 1) != 0;
            const bool member = tilde ? isInnerAdmissible(dom, k1, k2) : isAdmissible(dom, k1, k2);
            if (!member)
                continue;
            ++domainChecks;
            const auto box = dom.boundingBox();
            const CellIndex at =
                box.xmin - 1 + static_cast<CellIndex>(rng() % (box.xmax - box.xmin + 3));
            const Domain2D refined = (rng() & 1) ? splitCellColumn(dom, at) : splitCellRow(dom, at);
            const bool still = tilde ? isInnerAdmissible(refined, k1, k2) : isAdmissible(refined, k1, k2);
            if (!still)
                ++domainFailures;
        }

        Rng hrng(506);
        long long meshChecks = 0, meshFailures = 0;
        while (meshChecks < 100)
        {
            const int m = 1 + static_cast<int>(hrng() % 3);
            const int n = 1 + static_cast<int>(hrng() % 3);
            const int levels = 2 + static_cast<int>(hrng() % 2);
            const HierarchicalMesh mesh = randomBasisHierarchy(hrng, m, n, levels);
            const int level = static_cast<int>(hrng() % mesh.levelCount());
            const Axis axis = (hrng() & 1) ? Axis::X : Axis::Y;
            const auto& lines = mesh.levels[static_cast<std::size_t>(level)].grid.lines(axis);
            const Rational coord = lines.front() + (lines.back() - lines.front()) *
                                                       Rational(1 + static_cast<long long>(hrng() % 70), 71);
            const HierarchicalMesh refined = refineByLine(mesh, axis, coord, level);
            ++meshChecks;
            const auto conditions = checkBasisConditions(refined, m, n);
            if (!std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; }))
                ++meshFailures;
        }
        detail = "500 (domain, line) pairs with " + std::to_string(domainFailures) +
                 " losses; 100 (hierarchy, line, level) triples with " + std::to_string(meshFailures) +
                 " losses";
        return domainFailures == 0 && meshFailures == 0;
    }

    bool criterion6(std::string& detail)
    {
        const BasisReport demo = verifyBasis(demo2Mesh(), 2, 2);
        bool ok = demo.selectionSize == 132 && demo.dimension == 132 && demo.rank == 132 && demo.certified;

        Rng rng(606);
        int certified = 0;
        for (int iter = 0; iter < 25; ++iter)
        {
            const int m = 1 + static_cast<int>(rng() % 3);
            const int n = 1 + static_cast<int>(rng() % 3);
            const int levels = 2 + static_cast<int>(rng() % 2);
            const HierarchicalMesh mesh = randomBasisHierarchy(rng, m, n, levels);
            const BasisReport report = verifyBasis(mesh, m, n);
            if (report.certified && report.conditionsHold)
                ++certified;
        }
        detail = "demo fixture |K| = rank = dim = 132; " + std::to_string(certified) +
                 "/25 fuzzed hierarchies certified";
        return ok && certified == 25;
    }

    bool criterion7(std::string& detail)
    {
        const HierarchicalMesh demo = demo2Mesh();
        const PouResult demoPou = pouWeights(demo, 2, 2, kraftSelect(demo, 2, 2));
        bool ok = demoPou.status == PouResult::Status::Unique && demoPou.weights.size() == 132 &&
                  demoPou.allPositive && demoPou.residualZero;

        Rng rng(707);
        int positive = 0;
        for (int iter = 0; iter < 10; ++iter)
        {
            const int m = 1 + static_cast<int>(rng() % 3);
            const int n = 1 + static_cast<int>(rng() % 3);
            const int levels = 2 + static_cast<int>(rng() % 2);
            const HierarchicalMesh mesh = randomPouHierarchy(rng, m, n, levels);
            const PouResult pou = pouWeights(mesh, m, n, kraftSelect(mesh, m, n));
            if (pou.status == PouResult::Status::Unique && pou.allPositive && pou.residualZero)
                ++positive;
        }
        detail = "demo fixture: 132 positive weights, zero residual; " + std::to_string(positive) +
                 "/10 fuzzed hierarchies positive";
        return ok && positive == 10;
    }

    bool criterion8(std::string& detail)
    {
        Rng rng(808);
        int nested = 0, recertified = 0;
        const int cases = 10;
        for (int iter = 0; iter < cases; ++iter)
        {
            const int m = 1 + static_cast<int>(rng() % 3);
            const int n = 1 + static_cast<int>(rng() % 3);
            const int levels = 2 + static_cast<int>(rng() % 2);
            const HierarchicalMesh mesh = randomPouHierarchy(rng, m, n, levels);
            const PouResult before = pouWeights(mesh, m, n, kraftSelect(mesh, m, n));
            if (!(before.status == PouResult::Status::Unique && before.allPositive && before.residualZero))
                continue;
            const int level = static_cast<int>(rng() % mesh.levelCount());
            const Axis axis = (rng() & 1) ? Axis::X : Axis::Y;
            const auto& lines = mesh.levels[static_cast<std::size_t>(level)].grid.lines(axis);
            const Rational coord = lines.front() + (lines.back() - lines.front()) *
                                                       Rational(1 + static_cast<long long>(rng() % 70), 71);
            const HierarchicalMesh refined = refineByLine(mesh, axis, coord, level);
            if (checkSupportNesting(mesh, refined, m, n, level))
                ++nested;
            const PouResult after = pouWeights(refined, m, n, kraftSelect(refined, m, n));
            if (after.status == PouResult::Status::Unique && after.allPositive && after.residualZero)
                ++recertified;
        }
        detail = std::to_string(nested) + "/" + std::to_string(cases) + " refinements nested, " +
                 std::to_string(recertified) + "/" + std::to_string(cases) + " re-certified positive";
        return nested == cases && recertified == cases;
    }

    bool criterion9(std::string& detail)
    {
        Rng rng(909);
        long long unionFailures = 0;
        for (int iter = 0; iter < 1000; ++iter)
        {
            const int parity = static_cast<int>(rng() & 1);
            const Domain1D a = randomDomain1D(rng, 30, 0.3, parity);
            const Domain1D b = randomDomain1D(rng, 30, 0.3, parity);
            const int k = static_cast<int>(rng() % 7);
            if (!(dilate(unionOf(a, b), k) == unionOf(dilate(a, k), dilate(b, k))))
                ++unionFailures;
        }

        long long p1Hits = 0, p1Failures = 0, p2Hits = 0, p2Failures = 0;
        for (int iter = 0; iter < 1000; ++iter)
        {
            const Domain1D a = randomGappedDomain1D(rng, 26, 2);
            const Domain1D b = randomGappedDomain1D(rng, 26, 2);
            const Domain1D da = dilate(a, 1), db = dilate(b, 1);
            if (intersectionIsCellUnion(a, b) && intersectionIsCellUnion(da, db))
            {
                ++p1Hits;
                if (!(cellIntersection(da, db) == dilate(cellIntersection(a, b), 1)))
                    ++p1Failures;
            }
            if (admitsOffset(a, 1) && admitsOffset(b, 1) && intersectionIsCellUnion(a, b))
            {
                ++p2Hits;
                if (!admitsOffset(cellIntersection(a, b), 1))
                    ++p2Failures;
            }
        }

        long long dimHits = 0, dimFailures = 0;
        for (int iter = 0; iter < 4000; ++iter)
        {
            const int m = 1 + static_cast<int>(rng() % 4);
            const Domain1D dom = randomGappedDomain1D(rng, 30, m - 1 + static_cast<int>(rng() % 3));
            if (dom.empty() || !admitsOffset(dom, m - 1))
                continue;
            ++dimHits;
            if (static_cast<long long>(effectiveBsplineStarts(m, dom).size()) !=
                splineSpaceDimension(m, dom))
                ++dimFailures;
        }
        detail = "union " + std::to_string(unionFailures) + " failures; intersections " +
                 std::to_string(p1Hits) + "+" + std::to_string(p2Hits) + " hits with " +
                 std::to_string(p1Failures + p2Failures) + " failures; dim=count on " +
                 std::to_string(dimHits) + " offset-class domains with " + std::to_string(dimFailures) +
                 " failures";
        return unionFailures == 0 && p1Failures == 0 && p2Failures == 0 && dimFailures == 0 &&
               p1Hits >= 200 && p2Hits >= 200 && dimHits >= 1000;
    }
}

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria = {
        {1, "dimension triangle: formula = B-spline count = exact rank oracle", criterion1},
        {2, "negative controls on the gap-1 fixtures", criterion2},
        {3, "offset-class recursion routes agree", criterion3},
        {4, "closed-form dilated face counts match direct counts", criterion4},
        {5, "class and ring conditions survive line insertion", criterion5},
        {6, "hierarchical selections are certified bases", criterion6},
        {7, "positive weighted partitions of unity", criterion7},
        {8, "support nesting and re-certification under refinement", criterion8},
        {9, "univariate dilatation, intersection and dimension suite", criterion9},
    };

    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    bool allPassed = true;
    for (const Criterion& criterion : criteria)
    {
        if (only != 0 && criterion.number != only)
            continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool passed = false;
        try
        {
            passed = criterion.run(detail);
        }
        catch (const std::exception& e)
        {
            detail = std::string("exception: ") + e.what();
        }
        const auto seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count() /
            1000.0;
        std::printf("criterion %d: %s - %s (%s; %.1fs)\n", criterion.number,
                    passed ? "PASS" : "FAIL", criterion.summary.c_str(), detail.c_str(), seconds);
        allPassed = allPassed && passed;
    }
    return allPassed ? 0 : 1;
}
