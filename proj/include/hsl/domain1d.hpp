#pragma once
#include <vector>

#include <hsl/lattice.hpp>

namespace hsl
{
    /// Maximal run [first, last] of consecutive cells.
    struct CellRun
    {
        CellIndex first = 0;
        CellIndex last = 0;

        CellIndex length() const { return last - first + 1; }
    };

    /// A finite union of unit cells on a one-dimensional integer lattice.
    /// `parity` selects the plain (0) or half-shifted (1) lattice: cell i
    /// spans [i + parity/2, i + parity/2 + 1] in lattice units.
    struct Domain1D
    {
        int parity = 0;
        std::vector<CellIndex> cells;   // strictly increasing

        Domain1D() = default;
        Domain1D(int parity, std::vector<CellIndex> cells);

        bool empty() const { return cells.empty(); }
        bool contains(CellIndex i) const;
        std::vector<CellRun> components() const;

        friend bool operator==(const Domain1D&, const Domain1D&) = default;
    };

    /// The dilatation by k half-steps; result lives on the lattice of
    /// parity (parity + k) mod 2.
    Domain1D dilate(const Domain1D& dom, int k);

    /// Membership in the offset class: every gap between neighboring
    /// components exceeds k cells.
    bool admitsOffset(const Domain1D& dom, int k);

    /// (m+1) f1 - m f0^0 for maximal-smoothness splines of degree m.
    long long splineSpaceDimension(int degree, const Domain1D& dom);

    /// Start indices i of all degree-m B-spline supports {i,...,i+m}
    /// sharing at least one cell with the domain.
    std::vector<CellIndex> effectiveBsplineStarts(int degree, const Domain1D& dom);

    Domain1D unionOf(const Domain1D& a, const Domain1D& b);

    /// Cells present in both domains (same parity required).
    Domain1D cellIntersection(const Domain1D& a, const Domain1D& b);

    /// True when the point-set intersection of the two domains is a union of
    /// cells, i.e. the domains do not merely touch at lattice nodes.
    bool intersectionIsCellUnion(const Domain1D& a, const Domain1D& b);

    /// Index remap for inserting a grid node inside cell `at`: that cell
    /// splits in two, later cells shift by one.
    Domain1D splitCell(const Domain1D& dom, CellIndex at);

    long long componentCount(const Domain1D& dom);
}
