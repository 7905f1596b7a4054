#pragma once
#include <vector>

#include <hsl/grid.hpp>

namespace hsl
{
    struct MeshCell
    {
        int level = 0;
        GridCell index;
        Rational x0, x1, y0, y1;

        Rational width() const { return x1 - x0; }
        Rational height() const { return y1 - y0; }
    };

    /// Two cells sharing a 1D segment of positive length. `normal` is the
    /// axis perpendicular to the segment: Axis::X for a vertical segment at
    /// x = coord (cell a left, b right), Axis::Y for a horizontal one
    /// (a below, b above). The segment spans [lo, hi] along the line.
    struct MeshInterface
    {
        std::size_t a = 0;
        std::size_t b = 0;
        Axis normal = Axis::X;
        Rational coord, lo, hi;
    };

    /// A T-mesh as a cell complex: interior-disjoint rectangles plus all
    /// positive-length interfaces between them.
    struct TMeshComplex
    {
        std::vector<MeshCell> cells;
        std::vector<MeshInterface> interfaces;
    };

    /// Complex of a single-level domain over a grid.
    TMeshComplex singleLevelMesh(const Grid2& grid, const Domain2D& dom, int level = 0);

    /// Deterministically ordered interfaces of an interior-disjoint cell set.
    std::vector<MeshInterface> buildInterfaces(const std::vector<MeshCell>& cells);
}
