#include <hsl/hierarchy.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <hsl/errors.hpp>
#include <hsl/polynomial.hpp>

namespace hsl
{
    namespace
    {
        const MeshLevel& levelAt(const HierarchicalMesh& mesh, int level)
        {
            if (level < 0 || level >= mesh.levelCount())
                throw ConfigError("level index out of range");
            return mesh.levels[static_cast<std::size_t>(level)];
        }

        /// Index of every line of `coarse` within `fine`; empty when not nested.
        std::optional<std::vector<long long>> lineEmbedding(const std::vector<Rational>& coarse,
                                                            const std::vector<Rational>& fine)
        {
            std::vector<long long> map;
            map.reserve(coarse.size());
            std::size_t j = 0;
            for (const Rational& c : coarse)
            {
                while (j < fine.size() && fine[j] < c)
                    ++j;
                if (j == fine.size() || !(fine[j] == c))
                    return std::nullopt;
                map.push_back(static_cast<long long>(j));
            }
            return map;
        }
    }

    Diagnostics validateHierarchy(const HierarchicalMesh& mesh)
    {
        if (mesh.levels.empty())
            return {false, -1, "mesh has no levels"};
        for (int l = 0; l < mesh.levelCount(); ++l)
        {
            const MeshLevel& lev = mesh.levels[static_cast<std::size_t>(l)];
            for (const GridCell& c : lev.domain.cells)
                if (!lev.grid.cellInWindow(c))
                    return {false, l, "domain cell outside the stored grid window"};
        }
        for (int l = 0; l + 1 < mesh.levelCount(); ++l)
        {
            const MeshLevel& coarse = mesh.levels[static_cast<std::size_t>(l)];
            const MeshLevel& fine = mesh.levels[static_cast<std::size_t>(l + 1)];
            for (const Axis a : {Axis::X, Axis::Y})
                if (!lineEmbedding(coarse.grid.lines(a), fine.grid.lines(a)))
                    return {false, l + 1,
                            std::string("grid lines of level ") + std::to_string(l) +
                                " are not all present on level " + std::to_string(l + 1) +
                                (a == Axis::X ? " (x axis)" : " (y axis)")};
            // Domain nesting: every fine cell sits inside a coarse domain cell.
            for (const GridCell& c : fine.domain.cells)
            {
                const Rational x = fine.grid.line(Axis::X, c.x);
                const Rational y = fine.grid.line(Axis::Y, c.y);
                const auto ci = coarse.grid.cellIndexOf(Axis::X, x);
                const auto cj = coarse.grid.cellIndexOf(Axis::Y, y);
                if (!ci || !cj || !coarse.domain.contains(*ci, *cj))
                    return {false, l + 1, "domain is not contained in the previous level's domain"};
            }
        }
        for (int l = 1; l < mesh.levelCount(); ++l)
        {
            const MeshLevel& prev = mesh.levels[static_cast<std::size_t>(l - 1)];
            const MeshLevel& lev = mesh.levels[static_cast<std::size_t>(l)];
            for (const GridCell& c : lev.domain.cells)
            {
                const bool leftOpen = !lev.domain.contains(c.x - 1, c.y);
                const bool rightOpen = !lev.domain.contains(c.x + 1, c.y);
                const bool downOpen = !lev.domain.contains(c.x, c.y - 1);
                const bool upOpen = !lev.domain.contains(c.x, c.y + 1);
                if ((leftOpen && !prev.grid.lineIndexOf(Axis::X, lev.grid.line(Axis::X, c.x))) ||
                    (rightOpen && !prev.grid.lineIndexOf(Axis::X, lev.grid.line(Axis::X, c.x + 1))) ||
                    (downOpen && !prev.grid.lineIndexOf(Axis::Y, lev.grid.line(Axis::Y, c.y))) ||
                    (upOpen && !prev.grid.lineIndexOf(Axis::Y, lev.grid.line(Axis::Y, c.y + 1))))
                    return {false, l,
                            "domain boundary is not aligned with the grid lines of level " +
                                std::to_string(l - 1)};
            }
        }
        return {};
    }

    Domain2D domainOnGrid(const HierarchicalMesh& mesh, int domLevel, int gridLevel)
    {
        const MeshLevel& src = levelAt(mesh, domLevel);
        if (domLevel == gridLevel)
            return src.domain;
        const MeshLevel& dst = levelAt(mesh, gridLevel);

        if (domLevel < gridLevel)
        {
            // Refine: each source cell becomes the block of target cells it covers.
            std::vector<GridCell> cells;
            std::vector<long long> xmap, ymap;
            for (const Axis a : {Axis::X, Axis::Y})
            {
                auto map = lineEmbedding(src.grid.lines(a), dst.grid.lines(a));
                if (!map)
                    throw InternalError("grids are not nested");
                (a == Axis::X ? xmap : ymap) = std::move(*map);
            }
            for (const GridCell& c : src.domain.cells)
                for (long long y = ymap[c.y]; y < ymap[c.y + 1]; ++y)
                    for (long long x = xmap[c.x]; x < xmap[c.x + 1]; ++x)
                        cells.push_back({x, y});
            return Domain2D({0, 0}, std::move(cells));
        }

        // Coarsen: group source cells by the containing target cell and
        // require full coverage.
        std::map<GridCell, long long> covered;
        for (const GridCell& c : src.domain.cells)
        {
            const auto ci = dst.grid.cellIndexOf(Axis::X, src.grid.line(Axis::X, c.x));
            const auto cj = dst.grid.cellIndexOf(Axis::Y, src.grid.line(Axis::Y, c.y));
            if (!ci || !cj)
                throw InternalError("domain cell outside the coarser window");
            ++covered[GridCell{*ci, *cj}];
        }
        auto fineCellsInside = [&](const GridCell& c) {
            const auto x0 = src.grid.lineIndexOf(Axis::X, dst.grid.line(Axis::X, c.x));
            const auto x1 = src.grid.lineIndexOf(Axis::X, dst.grid.line(Axis::X, c.x + 1));
            const auto y0 = src.grid.lineIndexOf(Axis::Y, dst.grid.line(Axis::Y, c.y));
            const auto y1 = src.grid.lineIndexOf(Axis::Y, dst.grid.line(Axis::Y, c.y + 1));
            if (!x0 || !x1 || !y0 || !y1)
                throw InternalError("grids are not nested");
            return (*x1 - *x0) * (*y1 - *y0);
        };
        std::vector<GridCell> cells;
        for (const auto& [cell, count] : covered)
        {
            if (count != fineCellsInside(cell))
                throw InternalError("domain is not aligned with the coarser grid");
            cells.push_back(cell);
        }
        return Domain2D({0, 0}, std::move(cells));
    }

    std::vector<Domain2D> ringDomains(const HierarchicalMesh& mesh)
    {
        const int n = mesh.levelCount();
        std::vector<Domain2D> rings;
        rings.reserve(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l)
        {
            const Domain2D omega0 = domainOnGrid(mesh, 0, l);
            if (l + 1 < n)
                rings.push_back(cellDifference(omega0, domainOnGrid(mesh, l + 1, l)));
            else
                rings.push_back(omega0);
        }
        return rings;
    }

    std::vector<bool> checkBasisConditions(const HierarchicalMesh& mesh, int m, int n)
    {
        checkDegrees(m, n);
        std::vector<bool> ok;
        const auto rings = ringDomains(mesh);
        ok.reserve(rings.size());
        for (const Domain2D& ring : rings)
            ok.push_back(isAdmissible(ring, m - 1, n - 1));
        return ok;
    }

    bool PouConditions::ok() const
    {
        if (!baseAdmissible || !boundariesDisjoint)
            return false;
        return std::all_of(innerAdmissible.begin(), innerAdmissible.end(), [](bool b) { return b; });
    }

    PouConditions checkPouConditions(const HierarchicalMesh& mesh, int m, int n)
    {
        checkDegrees(m, n);
        PouConditions out;
        out.baseAdmissible = isAdmissible(levelAt(mesh, 0).domain, m - 1, n - 1);
        for (int l = 1; l < mesh.levelCount(); ++l)
            out.innerAdmissible.push_back(isInnerAdmissible(domainOnGrid(mesh, l, l - 1), m, n));
        if (mesh.levelCount() < 2)
        {
            out.boundariesDisjoint = true;
            return out;
        }
        // With Omega^1 closed inside Omega^0, disjoint boundaries mean every
        // coarse cell of Omega^1 keeps its full 3x3 neighborhood in Omega^0.
        const Domain2D omega0 = levelAt(mesh, 0).domain;
        const Domain2D omega1 = domainOnGrid(mesh, 1, 0);
        out.boundariesDisjoint = true;
        for (const GridCell& c : omega1.cells)
            for (CellIndex dx = -1; dx <= 1 && out.boundariesDisjoint; ++dx)
                for (CellIndex dy = -1; dy <= 1; ++dy)
                    if (!omega0.contains(c.x + dx, c.y + dy))
                    {
                        out.boundariesDisjoint = false;
                        break;
                    }
        return out;
    }

    HBasisSelection kraftSelect(const HierarchicalMesh& mesh, int m, int n)
    {
        checkDegrees(m, n);
        const auto rings = ringDomains(mesh);
        HBasisSelection sel;
        sel.perLevel.resize(static_cast<std::size_t>(mesh.levelCount()));
        for (int l = 0; l < mesh.levelCount(); ++l)
        {
            const Domain2D& ringCur = rings[static_cast<std::size_t>(l)];
            if (ringCur.empty())
                continue;
            Domain2D ringPrev;   // R^{l-1} expressed on this level's grid
            if (l > 0 && !rings[static_cast<std::size_t>(l - 1)].empty())
            {
                HierarchicalMesh view = mesh;   // reuse the embedding helper on ring domains
                view.levels[static_cast<std::size_t>(l - 1)].domain = rings[static_cast<std::size_t>(l - 1)];
                ringPrev = domainOnGrid(view, l - 1, l);
            }
            const Domain2D omega0 = domainOnGrid(mesh, 0, l);
            const Grid2& grid = levelAt(mesh, l).grid;
            for (const BSplineKey& key : enumerateActingKeys(m, n, ringCur, grid, l))
            {
                bool touchesPrev = false;
                for (CellIndex x = key.i; x <= key.i + m && !touchesPrev; ++x)
                    for (CellIndex y = key.j; y <= key.j + n; ++y)
                        if (ringPrev.contains(x, y))
                        {
                            touchesPrev = true;
                            break;
                        }
                bool actsOnBase = false;
                for (CellIndex x = key.i; x <= key.i + m && !actsOnBase; ++x)
                    for (CellIndex y = key.j; y <= key.j + n; ++y)
                        if (omega0.contains(x, y))
                        {
                            actsOnBase = true;
                            break;
                        }
                if (!touchesPrev && actsOnBase)
                    sel.perLevel[static_cast<std::size_t>(l)].push_back(key);
            }
        }
        return sel;
    }

    long long HBasisSelection::total() const
    {
        long long t = 0;
        for (const auto& level : perLevel)
            t += static_cast<long long>(level.size());
        return t;
    }

    HierarchicalMesh refineByLine(const HierarchicalMesh& mesh, Axis axis, const Rational& coord, int level)
    {
        levelAt(mesh, level);
        HierarchicalMesh out = mesh;
        for (int l = level; l < mesh.levelCount(); ++l)
        {
            MeshLevel& lev = out.levels[static_cast<std::size_t>(l)];
            auto& lines = lev.grid.lines(axis);
            if (coord <= lines.front() || coord >= lines.back())
                throw ConfigError("refinement line outside the grid window");
            const auto at = std::lower_bound(lines.begin(), lines.end(), coord);
            if (*at == coord)
                continue;   // line already present here (and, by nesting, below)
            const CellIndex splitIdx = static_cast<CellIndex>(at - lines.begin()) - 1;
            lines.insert(at, coord);
            lev.domain = axis == Axis::X ? splitCellColumn(lev.domain, splitIdx)
                                         : splitCellRow(lev.domain, splitIdx);
        }
        return out;
    }

    TMeshComplex leafMesh(const HierarchicalMesh& mesh)
    {
        TMeshComplex out;
        for (int l = 0; l < mesh.levelCount(); ++l)
        {
            const MeshLevel& lev = mesh.levels[static_cast<std::size_t>(l)];
            Domain2D active = lev.domain;
            if (l + 1 < mesh.levelCount())
                active = cellDifference(active, domainOnGrid(mesh, l + 1, l));
            for (const GridCell& c : active.cells)
                out.cells.push_back(MeshCell{l, c, lev.grid.line(Axis::X, c.x), lev.grid.line(Axis::X, c.x + 1),
                                             lev.grid.line(Axis::Y, c.y), lev.grid.line(Axis::Y, c.y + 1)});
        }
        out.interfaces = buildInterfaces(out.cells);
        return out;
    }

    SupportRect supportRect(const HierarchicalMesh& mesh, const BSplineKey& key)
    {
        const Grid2& grid = levelAt(mesh, key.level).grid;
        return SupportRect{grid.line(Axis::X, key.i), grid.line(Axis::X, key.i + key.degreeX + 1),
                           grid.line(Axis::Y, key.j), grid.line(Axis::Y, key.j + key.degreeY + 1)};
    }

    std::vector<SparseRatRow> selectionCellCoefficients(const HierarchicalMesh& mesh, int m, int n,
                                                        const HBasisSelection& sel, const TMeshComplex& leaf)
    {
        checkDegrees(m, n);
        const int perCell = (m + 1) * (n + 1);
        std::vector<SparseRatRow> rows;
        for (const auto& levelKeys : sel.perLevel)
            for (const BSplineKey& key : levelKeys)
            {
                const Grid2& grid = levelAt(mesh, key.level).grid;
                const SupportRect sup = supportRect(mesh, key);
                SparseRatRow row;
                for (std::size_t cellId = 0; cellId < leaf.cells.size(); ++cellId)
                {
                    const MeshCell& cell = leaf.cells[cellId];
                    if (cell.x0 >= sup.x1 || cell.x1 <= sup.x0 || cell.y0 >= sup.y1 || cell.y1 <= sup.y0)
                        continue;
                    if (cell.level < key.level)
                        throw InternalError("selected B-spline overlaps a coarser ring cell");
                    // The leaf cell nests inside one support cell of the key's grid.
                    const auto sx = grid.cellIndexOf(Axis::X, cell.x0);
                    const auto sy = grid.cellIndexOf(Axis::Y, cell.y0);
                    if (!sx || !sy)
                        throw InternalError("leaf cell outside the key's grid window");
                    const RationalMatrix onSupport = cellPolynomial(key, GridCell{*sx, *sy}, grid);
                    const RationalMatrix local = rebasePiece(
                        onSupport, grid.line(Axis::X, *sx), grid.line(Axis::X, *sx + 1) - grid.line(Axis::X, *sx),
                        grid.line(Axis::Y, *sy), grid.line(Axis::Y, *sy + 1) - grid.line(Axis::Y, *sy), cell.x0,
                        cell.width(), cell.y0, cell.height());
                    for (int r = 0; r <= m; ++r)
                        for (int s = 0; s <= n; ++s)
                            if (!local(r, s).isZero())
                                row.emplace_back(static_cast<int>(cellId) * perCell + r * (n + 1) + s,
                                                 local(r, s));
                }
                rows.push_back(std::move(row));
            }
        return rows;
    }

    PouResult pouWeights(const HierarchicalMesh& mesh, int m, int n, const HBasisSelection& sel)
    {
        const TMeshComplex leaf = leafMesh(mesh);
        const int perCell = (m + 1) * (n + 1);
        const auto keyRows = selectionCellCoefficients(mesh, m, n, sel, leaf);
        const int unknowns = static_cast<int>(keyRows.size());
        const long long eqCount = static_cast<long long>(leaf.cells.size()) * perCell;

        // Transpose key-major coefficients into per-equation rows.
        std::vector<SparseRatRow> rows(static_cast<std::size_t>(eqCount));
        for (int k = 0; k < unknowns; ++k)
            for (const auto& [eq, value] : keyRows[static_cast<std::size_t>(k)])
                rows[static_cast<std::size_t>(eq)].emplace_back(k, value);
        std::vector<Rational> rhs(static_cast<std::size_t>(eqCount), Rational(0));
        for (std::size_t cellId = 0; cellId < leaf.cells.size(); ++cellId)
            rhs[cellId * static_cast<std::size_t>(perCell)] = Rational(1);

        const ExactSolveResult solved = solveExact(rows, rhs, unknowns);
        PouResult out;
        out.status = solved.status == ExactSolveResult::Status::Unique ? PouResult::Status::Unique
                     : solved.status == ExactSolveResult::Status::Underdetermined
                         ? PouResult::Status::Underdetermined
                         : PouResult::Status::Inconsistent;
        if (out.status != PouResult::Status::Unique)
            return out;
        out.weights = solved.solution;
        out.allPositive =
            std::all_of(out.weights.begin(), out.weights.end(), [](const Rational& w) { return w.sign() > 0; });

        // Exact residual: the weighted sum must be the constant 1 on every leaf cell.
        std::vector<Rational> accum(static_cast<std::size_t>(eqCount), Rational(0));
        for (int k = 0; k < unknowns; ++k)
            for (const auto& [eq, value] : keyRows[static_cast<std::size_t>(k)])
                accum[static_cast<std::size_t>(eq)] += out.weights[static_cast<std::size_t>(k)] * value;
        out.residualZero = true;
        for (std::size_t eq = 0; eq < accum.size(); ++eq)
            if (accum[eq] != rhs[eq])
            {
                out.residualZero = false;
                break;
            }
        return out;
    }

    BasisReport verifyBasis(const HierarchicalMesh& mesh, int m, int n, long long maxUnknowns)
    {
        BasisReport report;
        const HBasisSelection sel = kraftSelect(mesh, m, n);
        const TMeshComplex leaf = leafMesh(mesh);
        report.selectionSize = sel.total();
        report.dimension = dimensionOracle(leaf, m, n, maxUnknowns);
        report.rank = exactRank(selectionCellCoefficients(mesh, m, n, sel, leaf));
        report.ringConditions = checkBasisConditions(mesh, m, n);
        report.conditionsHold = std::all_of(report.ringConditions.begin(), report.ringConditions.end(),
                                            [](bool b) { return b; });
        report.certified = report.selectionSize == report.dimension && report.rank == report.selectionSize;
        return report;
    }

    bool checkSupportNesting(const HierarchicalMesh& original, const HierarchicalMesh& refined, int m, int n,
                             int level, BSplineKey* counterexample)
    {
        const HBasisSelection before = kraftSelect(original, m, n);
        const HBasisSelection after = kraftSelect(refined, m, n);
        for (int l = level; l < refined.levelCount(); ++l)
        {
            for (const BSplineKey& key : after.perLevel[static_cast<std::size_t>(l)])
            {
                const SupportRect s = supportRect(refined, key);
                bool found = false;
                for (const BSplineKey& candidate : before.perLevel[static_cast<std::size_t>(l)])
                {
                    const SupportRect t = supportRect(original, candidate);
                    if (t.x0 <= s.x0 && s.x1 <= t.x1 && t.y0 <= s.y0 && s.y1 <= t.y1)
                    {
                        found = true;
                        break;
                    }
                }
                if (!found)
                {
                    if (counterexample)
                        *counterexample = key;
                    return false;
                }
            }
        }
        return true;
    }
}
