#pragma once
#include <vector>

#include <hsl/grid.hpp>
#include <hsl/polynomial.hpp>

namespace hsl
{
    /// Knot vector of the key along one axis: the degree+2 consecutive grid
    /// lines bounding its support cells.
    std::vector<Rational> knotVector(const BSplineKey& key, Axis a, const Grid2& grid);

    /// Exact value of the univariate B-spline with the given simple knots
    /// (Cox-de Boor recursion on values; zero outside the closed support).
    Rational bsplineValue(const std::vector<Rational>& knots, const Rational& x);

    /// Polynomial pieces of the univariate B-spline, one per knot span, as
    /// coefficient vectors in the global coordinate.
    std::vector<RationalVector> bsplinePieces(const std::vector<Rational>& knots);

    /// Exact value of the tensor-product B-spline at a point.
    Rational evaluate(const BSplineKey& key, const Rational& x, const Rational& y, const Grid2& grid);

    /// Coefficients of the B-spline on one grid cell in the local monomial
    /// basis of that cell (anchored at its lower-left corner, scaled by the
    /// cell extents). Cells outside the support give the zero matrix.
    RationalMatrix cellPolynomial(const BSplineKey& key, const GridCell& cell, const Grid2& grid);

    /// Independent extraction route: exact solve of the tensor Vandermonde
    /// interpolation problem on points strictly inside the cell. Must agree
    /// with cellPolynomial coefficient-for-coefficient.
    RationalMatrix cellPolynomialInterpolated(const BSplineKey& key, const GridCell& cell, const Grid2& grid);

    /// All degree-(m,n) supports sharing at least one cell with the domain.
    /// Throws WindowError when the stored grid window leaves less than
    /// degree+1 cells of margin around the domain.
    std::vector<BSplineKey> enumerateActingKeys(int m, int n, const Domain2D& dom, const Grid2& grid,
                                                int level = 0);
}
