#include <hsl/rational.hpp>

#include <ostream>

namespace hsl
{
    namespace
    {
        bool isDecimalInteger(const std::string& s)
        {
            if (s.empty())
                return false;
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size())
                return false;
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    return false;
            return true;
        }
    }

    Rational::Rational(const Integer& num, const Integer& den) : mValue(num, den)
    {
        if (den == 0)
            throw ConfigError("rational with zero denominator");
        mValue.canonicalize();
    }

    Rational::Rational(long long num, long long den)
        : Rational(Integer(std::to_string(num)), Integer(std::to_string(den)))
    {
    }

    Rational& Rational::operator/=(const Rational& o)
    {
        if (o.isZero())
            throw ConfigError("rational division by zero");
        mValue /= o.mValue;
        return *this;
    }

    Rational Rational::fromString(const std::string& text)
    {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
        {
            if (!isDecimalInteger(text))
                throw ParseError("not a rational literal: '" + text + "'");
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!isDecimalInteger(num) || !isDecimalInteger(den))
            throw ParseError("not a rational literal: '" + text + "'");
        if (Integer(den) == 0)
            throw ParseError("zero denominator in rational literal: '" + text + "'");
        return Rational(Integer(num), Integer(den));
    }

    std::string Rational::str() const
    {
        if (isInteger())
            return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    Rational pow(const Rational& base, long long exponent)
    {
        if (exponent < 0)
            throw ConfigError("negative exponent");
        Rational result(1);
        Rational b = base;
        long long e = exponent;
        while (e > 0)
        {
            if (e & 1)
                result *= b;
            b *= b;
            e >>= 1;
        }
        return result;
    }

    std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Integer binomial(long long n, long long k)
    {
        if (k < 0 || k > n)
            return Integer(0);
        Integer result;
        mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return result;
    }

    Integer fallingFactorial(long long n, long long k)
    {
        Integer result(1);
        for (long long i = 0; i < k; ++i)
            result *= Integer(std::to_string(n - i));
        return result;
    }
}
