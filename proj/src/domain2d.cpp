#include <hsl/domain2d.hpp>

#include <algorithm>
#include <set>
#include <utility>

#include <hsl/errors.hpp>

namespace hsl
{
    Domain2D::Domain2D(Parity2 parity_, std::vector<GridCell> cells_)
        : parity{parity_.x & 1, parity_.y & 1}, cells(std::move(cells_))
    {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    }

    bool Domain2D::contains(CellIndex x, CellIndex y) const
    {
        return std::binary_search(cells.begin(), cells.end(), GridCell{x, y});
    }

    Domain2D::Box Domain2D::boundingBox() const
    {
        Box box;
        if (cells.empty())
            return box;
        box.ymin = cells.front().y;
        box.ymax = cells.back().y;
        box.xmin = cells.front().x;
        box.xmax = cells.front().x;
        for (const GridCell& c : cells)
        {
            box.xmin = std::min(box.xmin, c.x);
            box.xmax = std::max(box.xmax, c.x);
        }
        return box;
    }

    bool isManifold(const Domain2D& dom)
    {
        // Inspect the 2x2 neighborhood of every vertex incident to a cell.
        for (const GridCell& c : dom.cells)
        {
            for (CellIndex vx : {c.x, c.x + 1})
                for (CellIndex vy : {c.y, c.y + 1})
                {
                    const bool ll = dom.contains(vx - 1, vy - 1);
                    const bool lr = dom.contains(vx, vy - 1);
                    const bool ul = dom.contains(vx - 1, vy);
                    const bool ur = dom.contains(vx, vy);
                    if ((ll && ur && !lr && !ul) || (lr && ul && !ll && !ur))
                        return false;
                }
        }
        return true;
    }

    FaceCounts faceCounts(const Domain2D& dom)
    {
        FaceCounts fc;
        fc.cells = static_cast<long long>(dom.cells.size());

        std::set<std::pair<CellIndex, CellIndex>> hEdges, vEdges, vertices;
        for (const GridCell& c : dom.cells)
        {
            hEdges.insert({c.x, c.y});
            hEdges.insert({c.x, c.y + 1});
            vEdges.insert({c.x, c.y});
            vEdges.insert({c.x + 1, c.y});
            for (CellIndex vx : {c.x, c.x + 1})
                for (CellIndex vy : {c.y, c.y + 1})
                    vertices.insert({vx, vy});

            if (dom.contains(c.x, c.y + 1))
                ++fc.hEdgesInner;
            if (dom.contains(c.x + 1, c.y))
                ++fc.vEdgesInner;
            // Attribute an inner vertex to its lower-left cell.
            if (dom.contains(c.x + 1, c.y) && dom.contains(c.x, c.y + 1) && dom.contains(c.x + 1, c.y + 1))
                ++fc.verticesInner;
        }
        fc.hEdges = static_cast<long long>(hEdges.size());
        fc.vEdges = static_cast<long long>(vEdges.size());
        fc.vertices = static_cast<long long>(vertices.size());
        return fc;
    }

    std::vector<Domain1D> rowProjections(const Domain2D& dom)
    {
        std::vector<Domain1D> rows;
        if (dom.empty())
            return rows;
        const auto box = dom.boundingBox();
        rows.resize(static_cast<std::size_t>(box.ymax - box.ymin + 1), Domain1D(dom.parity.x, {}));
        for (const GridCell& c : dom.cells)
            rows[static_cast<std::size_t>(c.y - box.ymin)].cells.push_back(c.x);
        return rows;   // per-row cells arrive sorted thanks to (y, x) order
    }

    std::vector<Domain1D> columnProjections(const Domain2D& dom)
    {
        std::vector<Domain1D> cols;
        if (dom.empty())
            return cols;
        const auto box = dom.boundingBox();
        cols.resize(static_cast<std::size_t>(box.xmax - box.xmin + 1), Domain1D(dom.parity.y, {}));
        for (const GridCell& c : dom.cells)
            cols[static_cast<std::size_t>(c.x - box.xmin)].cells.push_back(c.y);
        for (Domain1D& col : cols)
            std::sort(col.cells.begin(), col.cells.end());
        return cols;
    }

    std::vector<Domain1D> sigmaExtend(const std::vector<Domain1D>& seq)
    {
        std::vector<Domain1D> out;
        if (seq.empty())
            return out;
        out.reserve(seq.size() + 1);
        out.push_back(seq.front());
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            out.push_back(unionOf(seq[i], seq[i + 1]));
        out.push_back(seq.back());
        return out;
    }

    LineSplit splitByLine(const Domain2D& dom, Axis axis, CellIndex lineIndex)
    {
        LineSplit split;
        std::vector<GridCell> lower, upper;
        std::vector<CellIndex> shared;
        for (const GridCell& c : dom.cells)
        {
            const CellIndex along = axis == Axis::X ? c.x : c.y;
            (along < lineIndex ? lower : upper).push_back(c);
        }
        if (lower.empty() || upper.empty())
            throw ConfigError("split line does not pass through the interior of the domain's range");
        for (const GridCell& c : dom.cells)
        {
            if (axis == Axis::X && c.x == lineIndex - 1 && dom.contains(lineIndex, c.y))
                shared.push_back(c.y);
            if (axis == Axis::Y && c.y == lineIndex - 1 && dom.contains(c.x, lineIndex))
                shared.push_back(c.x);
        }
        split.lower = Domain2D(dom.parity, std::move(lower));
        split.upper = Domain2D(dom.parity, std::move(upper));
        split.interface1d = Domain1D(axis == Axis::X ? dom.parity.y : dom.parity.x, std::move(shared));
        return split;
    }

    namespace
    {
        Domain2D splitAlong(const Domain2D& dom, CellIndex at, bool column)
        {
            std::vector<GridCell> cells;
            cells.reserve(dom.cells.size() + 8);
            for (const GridCell& c : dom.cells)
            {
                const CellIndex v = column ? c.x : c.y;
                if (v < at)
                    cells.push_back(c);
                else if (v == at)
                {
                    cells.push_back(c);
                    cells.push_back(column ? GridCell{c.x + 1, c.y} : GridCell{c.x, c.y + 1});
                }
                else
                    cells.push_back(column ? GridCell{c.x + 1, c.y} : GridCell{c.x, c.y + 1});
            }
            return Domain2D(dom.parity, std::move(cells));
        }
    }

    Domain2D splitCellColumn(const Domain2D& dom, CellIndex at) { return splitAlong(dom, at, true); }
    Domain2D splitCellRow(const Domain2D& dom, CellIndex at) { return splitAlong(dom, at, false); }

    Domain2D unionOf(const Domain2D& a, const Domain2D& b)
    {
        if (a.empty())
            return b;
        if (b.empty())
            return a;
        if (!(a.parity == b.parity))
            throw ConfigError("union of domains on different lattices");
        std::vector<GridCell> cells;
        cells.reserve(a.cells.size() + b.cells.size());
        std::merge(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(), std::back_inserter(cells));
        return Domain2D(a.parity, std::move(cells));
    }

    Domain2D cellDifference(const Domain2D& a, const Domain2D& b)
    {
        if (a.empty() || b.empty())
            return a;
        if (!(a.parity == b.parity))
            throw ConfigError("difference of domains on different lattices");
        std::vector<GridCell> cells;
        std::set_difference(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                            std::back_inserter(cells));
        return Domain2D(a.parity, std::move(cells));
    }
}
