#pragma once
#include <hsl/rational.hpp>

namespace hsl
{
    /// Univariate polynomials are dense coefficient vectors in ascending
    /// powers; bivariate pieces are (degX+1) x (degY+1) matrices C with
    /// p(u,v) = sum C(r,s) u^r v^s.

    Rational evalPoly(const RationalVector& p, const Rational& x);

    RationalVector addPoly(const RationalVector& a, const RationalVector& b);

    /// p(x) * (c0 + c1 x)
    RationalVector mulLinear(const RationalVector& p, const Rational& c0, const Rational& c1);

    /// Coefficients of p(a + b u) as a polynomial in u (same length as p).
    RationalVector composeAffine(const RationalVector& p, const Rational& a, const Rational& b);

    /// Matrix A with A(r, r') = binom(r, r') a^(r-r') b^r', so that the
    /// substitution u = a + b u' maps coefficient vectors c to A^T c.
    RationalMatrix affinePowerMatrix(int degree, const Rational& a, const Rational& b);

    /// Re-expresses a bivariate piece given on [x0,x0+w] x [y0,y0+h] (local
    /// coordinates) over the sub-rectangle [x0',x0'+w'] x [y0',y0'+h'].
    RationalMatrix rebasePiece(const RationalMatrix& coeffs, const Rational& x0, const Rational& w,
                               const Rational& y0, const Rational& h, const Rational& x0p, const Rational& wp,
                               const Rational& y0p, const Rational& hp);
}
