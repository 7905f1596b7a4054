#include <hsl/dilation.hpp>

#include <map>

#include <hsl/errors.hpp>

namespace hsl
{
    namespace
    {
        // Dilates row-by-row (axis = X) or column-by-column (axis = Y); a
        // box Minkowski sum factors into the two axis sums.
        Domain2D dilateAxis(const Domain2D& dom, Axis axis, int k)
        {
            if (k == 0)
                return dom;
            std::map<CellIndex, Domain1D> slices;
            const int parity = axis == Axis::X ? dom.parity.x : dom.parity.y;
            for (const GridCell& c : dom.cells)
            {
                const CellIndex key = axis == Axis::X ? c.y : c.x;
                auto [it, inserted] = slices.try_emplace(key, Domain1D(parity, {}));
                it->second.cells.push_back(axis == Axis::X ? c.x : c.y);
            }
            std::vector<GridCell> cells;
            for (auto& [key, slice] : slices)
            {
                std::sort(slice.cells.begin(), slice.cells.end());
                const Domain1D grown = dilate(slice, k);
                for (CellIndex v : grown.cells)
                    cells.push_back(axis == Axis::X ? GridCell{v, key} : GridCell{key, v});
            }
            Parity2 parity2 = dom.parity;
            (axis == Axis::X ? parity2.x : parity2.y) = (parity + k) & 1;
            return Domain2D(parity2, std::move(cells));
        }
    }

    Domain2D dilate(const Domain2D& dom, int k1, int k2)
    {
        if (k1 < 0 || k2 < 0 || k1 > kMaxDilationOrder || k2 > kMaxDilationOrder)
            throw ConfigError("dilatation order out of range [0, 64]");
        return dilateAxis(dilateAxis(dom, Axis::X, k1), Axis::Y, k2);
    }

    FaceCounts dilatedFaceCounts(const FaceCounts& c, int k1, int k2)
    {
        if (k1 < 0 || k2 < 0 || k1 > kMaxDilationOrder || k2 > kMaxDilationOrder)
            throw ConfigError("dilatation order out of range [0, 64]");
        const long long a = k1, b = k2;
        const long long f2 = c.cells, h0 = c.hEdgesInner, v0 = c.vEdgesInner, p0 = c.verticesInner;

        FaceCounts d;
        d.cells = (a + 1) * (b + 1) * f2 - ((a + 1) * b * h0 + (b + 1) * a * v0) + a * b * p0;
        d.hEdges = (a + 1) * (b + 2) * f2 - ((a + 1) * (b + 1) * h0 + (b + 2) * a * v0) + a * (b + 1) * p0;
        d.vEdges = (a + 2) * (b + 1) * f2 - ((a + 2) * b * h0 + (b + 1) * (a + 1) * v0) + (a + 1) * b * p0;
        d.vertices =
            (a + 2) * (b + 2) * f2 - ((a + 2) * (b + 1) * h0 + (b + 2) * (a + 1) * v0) + (a + 1) * (b + 1) * p0;
        d.hEdgesInner = 2 * d.cells - d.hEdges;
        d.vEdgesInner = 2 * d.cells - d.vEdges;
        d.verticesInner = d.vertices - 4 * d.cells + 2 * (d.hEdgesInner + d.vEdgesInner);
        return d;
    }
}
