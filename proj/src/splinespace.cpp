#include <hsl/splinespace.hpp>

#include <hsl/errors.hpp>
#include <hsl/polynomial.hpp>

namespace hsl
{
    namespace
    {
        /// Coefficients (per unknown of one cell) of the order-`deriv`
        /// normal-derivative trace on the line {normal coordinate = coord},
        /// expanded in global monomials of the tangential coordinate.
        ///
        /// For a vertical interface the trace of sum C(r,s) u^r v^s is, per
        /// global power t of y:
        ///   sum_{r,s} C(r,s) * r!/(r-d)! * u*^(r-d) / w^d
        ///           * binom(s,t) (-y0)^(s-t) / h^s
        void addTraceTerms(SparseRatRow& row, int sign, std::size_t cellId, const MeshCell& cell, int m,
                           int n, Axis normal, const Rational& coord, int deriv, int tangentPower)
        {
            const int perCell = (m + 1) * (n + 1);
            const int base = static_cast<int>(cellId) * perCell;

            const bool vertical = normal == Axis::X;
            const int normalDeg = vertical ? m : n;
            const int tangentDeg = vertical ? n : m;
            const Rational n0 = vertical ? cell.x0 : cell.y0;
            const Rational nw = vertical ? cell.width() : cell.height();
            const Rational t0 = vertical ? cell.y0 : cell.x0;
            const Rational tw = vertical ? cell.height() : cell.width();
            const Rational uStar = (coord - n0) / nw;

            for (int r = deriv; r <= normalDeg; ++r)
            {
                const Rational dFactor =
                    Rational(fallingFactorial(r, deriv)) * pow(uStar, r - deriv) / pow(nw, deriv);
                if (dFactor.isZero())
                    continue;
                for (int s = tangentPower; s <= tangentDeg; ++s)
                {
                    const Rational tFactor =
                        Rational(binomial(s, tangentPower)) * pow(-t0, s - tangentPower) / pow(tw, s);
                    const Rational coeff = Rational(sign) * dFactor * tFactor;
                    if (coeff.isZero())
                        continue;
                    const int idx =
                        vertical ? base + r * (n + 1) + s : base + s * (n + 1) + r;
                    row.emplace_back(idx, coeff);
                }
            }
        }
    }

    RationalMatrix SmoothnessSystem::dense() const
    {
        RationalMatrix out = RationalMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                                      static_cast<Eigen::Index>(unknowns), Rational(0));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r])
                out(static_cast<Eigen::Index>(r), c) += v;
        return out;
    }

    SmoothnessSystem assembleSmoothnessSystem(const TMeshComplex& mesh, int m, int n)
    {
        checkDegrees(m, n);
        SmoothnessSystem sys;
        sys.m = m;
        sys.n = n;
        sys.unknowns = static_cast<long long>(mesh.cells.size()) * (m + 1) * (n + 1);
        for (const MeshInterface& face : mesh.interfaces)
        {
            if (!(face.lo < face.hi))
                throw ConfigError("degenerate mesh interface");
            const int derivOrders = face.normal == Axis::X ? m : n;
            const int tangentDeg = face.normal == Axis::X ? n : m;
            for (int d = 0; d < derivOrders; ++d)
                for (int t = 0; t <= tangentDeg; ++t)
                {
                    SparseRatRow row;
                    addTraceTerms(row, +1, face.a, mesh.cells[face.a], m, n, face.normal, face.coord, d, t);
                    addTraceTerms(row, -1, face.b, mesh.cells[face.b], m, n, face.normal, face.coord, d, t);
                    sys.rows.push_back(std::move(row));
                }
        }
        return sys;
    }

    long long dimensionOracle(const TMeshComplex& mesh, int m, int n, long long maxUnknowns)
    {
        checkDegrees(m, n);
        const long long unknowns = static_cast<long long>(mesh.cells.size()) * (m + 1) * (n + 1);
        if (unknowns > maxUnknowns)
            throw SizeGuardError("constraint system would have " + std::to_string(unknowns) +
                                 " unknowns (limit " + std::to_string(maxUnknowns) + ")");
        const SmoothnessSystem sys = assembleSmoothnessSystem(mesh, m, n);
        return sys.unknowns - exactRank(sys.rows);
    }

    long long dimensionFormula(int m, int n, const FaceCounts& c)
    {
        return static_cast<long long>(m + 1) * (n + 1) * c.cells - (m + 1) * static_cast<long long>(n) * c.hEdgesInner -
               (n + 1) * static_cast<long long>(m) * c.vEdgesInner + static_cast<long long>(m) * n * c.verticesInner;
    }
}
