#pragma once
#include <optional>
#include <vector>

#include <hsl/domain2d.hpp>
#include <hsl/rational.hpp>

namespace hsl
{
    /// A tensor grid given by its stored knot-line coordinates per axis.
    /// Indices beyond the stored window extend notionally with the outermost
    /// spacing of that side, so every line index has a coordinate.
    struct Grid2
    {
        std::vector<Rational> xs;   // strictly increasing, size >= 2
        std::vector<Rational> ys;

        Grid2() = default;
        Grid2(std::vector<Rational> xs, std::vector<Rational> ys);

        const std::vector<Rational>& lines(Axis a) const { return a == Axis::X ? xs : ys; }
        std::vector<Rational>& lines(Axis a) { return a == Axis::X ? xs : ys; }

        long long lineCount(Axis a) const { return static_cast<long long>(lines(a).size()); }
        long long cellCount(Axis a) const { return lineCount(a) - 1; }

        Rational line(Axis a, long long index) const;
        std::optional<long long> lineIndexOf(Axis a, const Rational& coord) const;

        /// Index of the cell [line(i), line(i+1)) containing the coordinate;
        /// nullopt outside the stored window.
        std::optional<long long> cellIndexOf(Axis a, const Rational& coord) const;

        bool cellInWindow(const GridCell& c) const
        {
            return c.x >= 0 && c.x < cellCount(Axis::X) && c.y >= 0 && c.y < cellCount(Axis::Y);
        }

        friend bool operator==(const Grid2&, const Grid2&) = default;
    };

    /// One tensor-product B-spline: level, lower-left support cell and
    /// bi-degree. Its support covers cells {i..i+degreeX} x {j..j+degreeY}
    /// of the level grid, with the m+2 / n+2 bounding lines as simple knots.
    struct BSplineKey
    {
        int level = 0;
        CellIndex i = 0;
        CellIndex j = 0;
        int degreeX = 1;
        int degreeY = 1;

        friend bool operator==(const BSplineKey&, const BSplineKey&) = default;
        friend bool operator<(const BSplineKey& a, const BSplineKey& b)
        {
            if (a.level != b.level)
                return a.level < b.level;
            if (a.j != b.j)
                return a.j < b.j;
            if (a.i != b.i)
                return a.i < b.i;
            return std::pair(a.degreeX, a.degreeY) < std::pair(b.degreeX, b.degreeY);
        }
    };

    void checkDegrees(int m, int n);
    inline constexpr int kMaxDegree = 6;
}
