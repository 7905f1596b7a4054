#pragma once
#include <gmpxx.h>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>

#include <hsl/errors.hpp>

namespace hsl
{
    using Integer = mpz_class;

    /// Exact rational number with eager value semantics, always in lowest
    /// terms. Wraps GMP's mpq_class so it can serve as an Eigen scalar.
    class Rational
    {
        public:
        Rational() : mValue(0) {}
        Rational(int n) : mValue(n) {}
        Rational(long n) : mValue(static_cast<signed long>(n)) {}
        Rational(long long n) : mValue(Integer(std::to_string(n))) {}
        Rational(const Integer& n) : mValue(n) {}
        Rational(const Integer& num, const Integer& den);
        Rational(long long num, long long den);

        /// Parses "p", "-p" or "p/q" with decimal integers.
        static Rational fromString(const std::string& text);

        const Integer& num() const { return mValue.get_num(); }
        const Integer& den() const { return mValue.get_den(); }
        bool isZero() const { return mValue.get_num() == 0; }
        bool isInteger() const { return mValue.get_den() == 1; }
        int sign() const { return sgn(mValue); }

        std::string str() const;
        double toDouble() const { return mValue.get_d(); }

        Rational operator-() const { return Rational(mpq_class(-mValue)); }
        Rational& operator+=(const Rational& o) { mValue += o.mValue; return *this; }
        Rational& operator-=(const Rational& o) { mValue -= o.mValue; return *this; }
        Rational& operator*=(const Rational& o) { mValue *= o.mValue; return *this; }
        Rational& operator/=(const Rational& o);

        friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
        friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
        friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
        friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

        friend bool operator==(const Rational& a, const Rational& b) { return a.mValue == b.mValue; }
        friend bool operator!=(const Rational& a, const Rational& b) { return a.mValue != b.mValue; }
        friend bool operator<(const Rational& a, const Rational& b) { return a.mValue < b.mValue; }
        friend bool operator<=(const Rational& a, const Rational& b) { return a.mValue <= b.mValue; }
        friend bool operator>(const Rational& a, const Rational& b) { return a.mValue > b.mValue; }
        friend bool operator>=(const Rational& a, const Rational& b) { return a.mValue >= b.mValue; }

        private:
        explicit Rational(mpq_class v) : mValue(std::move(v)) {}
        mpq_class mValue;
    };

    inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
    Rational pow(const Rational& base, long long exponent);

    std::ostream& operator<<(std::ostream& os, const Rational& r);

    Integer binomial(long long n, long long k);
    /// n (n-1) ... (n-k+1)
    Integer fallingFactorial(long long n, long long k);

    using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
    using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
}

namespace Eigen
{
    template <>
    struct NumTraits<hsl::Rational> : GenericNumTraits<hsl::Rational>
    {
        typedef hsl::Rational Real;
        typedef hsl::Rational NonInteger;
        typedef hsl::Rational Nested;
        typedef hsl::Rational Literal;

        static inline Real epsilon() { return hsl::Rational(0); }
        static inline Real dummy_precision() { return hsl::Rational(0); }
        static inline int digits10() { return 0; }

        enum
        {
            IsComplex = 0,
            IsInteger = 0,
            IsSigned = 1,
            RequireInitialization = 1,
            ReadCost = 8,
            AddCost = 60,
            MulCost = 60
        };
    };
}
