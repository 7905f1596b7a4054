#include <hsl/polynomial.hpp>

namespace hsl
{
    Rational evalPoly(const RationalVector& p, const Rational& x)
    {
        Rational acc(0);
        for (Eigen::Index i = p.size() - 1; i >= 0; --i)
            acc = acc * x + p(i);
        return acc;
    }

    RationalVector addPoly(const RationalVector& a, const RationalVector& b)
    {
        RationalVector out = RationalVector::Constant(std::max(a.size(), b.size()), Rational(0));
        for (Eigen::Index i = 0; i < a.size(); ++i)
            out(i) += a(i);
        for (Eigen::Index i = 0; i < b.size(); ++i)
            out(i) += b(i);
        return out;
    }

    RationalVector mulLinear(const RationalVector& p, const Rational& c0, const Rational& c1)
    {
        RationalVector out = RationalVector::Constant(p.size() + 1, Rational(0));
        for (Eigen::Index i = 0; i < p.size(); ++i)
        {
            out(i) += p(i) * c0;
            out(i + 1) += p(i) * c1;
        }
        return out;
    }

    RationalVector composeAffine(const RationalVector& p, const Rational& a, const Rational& b)
    {
        RationalVector out = RationalVector::Constant(p.size(), Rational(0));
        // Horner in the substituted variable: out = p[k] + (a + b u) * out.
        for (Eigen::Index k = p.size() - 1; k >= 0; --k)
        {
            RationalVector next = RationalVector::Constant(p.size(), Rational(0));
            next(0) = p(k) + a * out(0);
            for (Eigen::Index i = 1; i < p.size(); ++i)
                next(i) = a * out(i) + b * out(i - 1);
            out = std::move(next);
        }
        return out;
    }

    RationalMatrix affinePowerMatrix(int degree, const Rational& a, const Rational& b)
    {
        RationalMatrix m = RationalMatrix::Constant(degree + 1, degree + 1, Rational(0));
        for (int r = 0; r <= degree; ++r)
        {
            // (a + b u)^r expanded in u.
            for (int rp = 0; rp <= r; ++rp)
                m(r, rp) = Rational(binomial(r, rp)) * pow(a, r - rp) * pow(b, rp);
        }
        return m;
    }

    RationalMatrix rebasePiece(const RationalMatrix& coeffs, const Rational& x0, const Rational& w,
                               const Rational& y0, const Rational& h, const Rational& x0p, const Rational& wp,
                               const Rational& y0p, const Rational& hp)
    {
        // u = (x - x0)/w with x = x0p + wp u'  =>  u = (x0p - x0)/w + (wp/w) u'
        const RationalMatrix ax =
            affinePowerMatrix(static_cast<int>(coeffs.rows()) - 1, (x0p - x0) / w, wp / w);
        const RationalMatrix ay =
            affinePowerMatrix(static_cast<int>(coeffs.cols()) - 1, (y0p - y0) / h, hp / h);
        return ax.transpose() * coeffs * ay;
    }
}
