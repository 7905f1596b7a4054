#pragma once
#include <hsl/exactlinalg.hpp>
#include <hsl/tmesh.hpp>

namespace hsl
{
    inline constexpr long long kDefaultMaxUnknowns = 20000;

    /// The maximal-smoothness constraint system of a T-mesh: one block of
    /// m(n+1) equations per vertical interface (equal x-derivative traces of
    /// order 0..m-1 as global degree-n polynomials in y) and n(m+1) per
    /// horizontal interface. Unknowns are the (m+1)(n+1) local monomial
    /// coefficients per cell, in cell order.
    struct SmoothnessSystem
    {
        int m = 0, n = 0;
        long long unknowns = 0;
        std::vector<SparseRatRow> rows;

        RationalMatrix dense() const;
    };

    SmoothnessSystem assembleSmoothnessSystem(const TMeshComplex& mesh, int m, int n);

    /// dim = (m+1)(n+1)#cells - rank of the smoothness system, with the rank
    /// computed exactly over the rationals.
    long long dimensionOracle(const TMeshComplex& mesh, int m, int n,
                              long long maxUnknowns = kDefaultMaxUnknowns);

    /// (m+1)(n+1) f2 - (m+1)n f1h0 - (n+1)m f1v0 + mn f00.
    long long dimensionFormula(int m, int n, const FaceCounts& c);
}
