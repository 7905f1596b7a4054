#pragma once
#include <vector>

#include <hsl/domain1d.hpp>
#include <hsl/lattice.hpp>

namespace hsl
{
    struct GridCell
    {
        CellIndex x = 0;
        CellIndex y = 0;

        friend bool operator==(const GridCell&, const GridCell&) = default;
        // Row-major bottom-to-top; keeps per-row slices contiguous.
        friend bool operator<(const GridCell& a, const GridCell& b)
        {
            return a.y != b.y ? a.y < b.y : a.x < b.x;
        }
    };

    struct Parity2
    {
        int x = 0;
        int y = 0;

        friend bool operator==(const Parity2&, const Parity2&) = default;
    };

    /// A finite union of unit cells on a two-dimensional integer lattice;
    /// cell (i,j) spans [i + px/2, i + px/2 + 1] x [j + py/2, j + py/2 + 1].
    struct Domain2D
    {
        Parity2 parity;
        std::vector<GridCell> cells;   // sorted (y, x), unique

        Domain2D() = default;
        Domain2D(Parity2 parity, std::vector<GridCell> cells);

        bool empty() const { return cells.empty(); }
        bool contains(CellIndex x, CellIndex y) const;

        struct Box
        {
            CellIndex xmin = 0, xmax = -1, ymin = 0, ymax = -1;
        };
        Box boundingBox() const;   // empty domain: xmax < xmin

        friend bool operator==(const Domain2D&, const Domain2D&) = default;
    };

    struct FaceCounts
    {
        long long cells = 0;           // f2
        long long hEdgesInner = 0;     // f1^{h,0}
        long long vEdgesInner = 0;     // f1^{v,0}
        long long verticesInner = 0;   // f0^0
        long long hEdges = 0;          // f1^h
        long long vEdges = 0;          // f1^v
        long long vertices = 0;        // f0

        friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
    };

    /// A boundary vertex with exactly the two diagonal cells of its 2x2
    /// neighborhood present pinches the domain; everything else is a
    /// topological manifold with boundary.
    bool isManifold(const Domain2D& dom);

    FaceCounts faceCounts(const Domain2D& dom);

    /// Per-row projections onto the x-axis, bottom-to-top over the occupied
    /// row range (rows without cells yield empty entries).
    std::vector<Domain1D> rowProjections(const Domain2D& dom);
    /// Per-column projections onto the y-axis, left-to-right.
    std::vector<Domain1D> columnProjections(const Domain2D& dom);

    /// <D1, D1 u D2, ..., D_{n-1} u D_n, D_n>
    std::vector<Domain1D> sigmaExtend(const std::vector<Domain1D>& seq);

    struct LineSplit
    {
        Domain2D lower;        // cells below / left of the line
        Domain2D upper;        // cells above / right of the line
        Domain1D interface1d;  // shared 1D domain on the splitting line
    };

    /// Splits by the grid line with the given lattice index (Axis::X means a
    /// vertical line at x-index `lineIndex`). Both sides must be nonempty.
    LineSplit splitByLine(const Domain2D& dom, Axis axis, CellIndex lineIndex);

    /// Index remaps for inserting a grid line through cell column / row `at`.
    Domain2D splitCellColumn(const Domain2D& dom, CellIndex at);
    Domain2D splitCellRow(const Domain2D& dom, CellIndex at);

    Domain2D unionOf(const Domain2D& a, const Domain2D& b);
    Domain2D cellDifference(const Domain2D& a, const Domain2D& b);
}
