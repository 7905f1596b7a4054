#include <hsl/grid.hpp>

#include <algorithm>

#include <hsl/errors.hpp>

namespace hsl
{
    Grid2::Grid2(std::vector<Rational> xs_, std::vector<Rational> ys_) : xs(std::move(xs_)), ys(std::move(ys_))
    {
        for (const auto* axis : {&xs, &ys})
        {
            if (axis->size() < 2)
                throw ConfigError("grid axis needs at least two lines");
            for (std::size_t i = 1; i < axis->size(); ++i)
                if (!((*axis)[i - 1] < (*axis)[i]))
                    throw ConfigError("grid lines must be strictly increasing");
        }
    }

    Rational Grid2::line(Axis a, long long index) const
    {
        const auto& ls = lines(a);
        const long long n = static_cast<long long>(ls.size());
        if (index >= 0 && index < n)
            return ls[static_cast<std::size_t>(index)];
        if (index < 0)
        {
            const Rational step = ls[1] - ls[0];
            return ls[0] + Rational(index) * step;
        }
        const Rational step = ls[n - 1] - ls[n - 2];
        return ls[n - 1] + Rational(index - (n - 1)) * step;
    }

    std::optional<long long> Grid2::lineIndexOf(Axis a, const Rational& coord) const
    {
        const auto& ls = lines(a);
        const auto it = std::lower_bound(ls.begin(), ls.end(), coord);
        if (it != ls.end() && *it == coord)
            return static_cast<long long>(it - ls.begin());
        return std::nullopt;
    }

    std::optional<long long> Grid2::cellIndexOf(Axis a, const Rational& coord) const
    {
        const auto& ls = lines(a);
        if (coord < ls.front() || coord >= ls.back())
            return std::nullopt;
        const auto it = std::upper_bound(ls.begin(), ls.end(), coord);
        return static_cast<long long>(it - ls.begin()) - 1;
    }

    void checkDegrees(int m, int n)
    {
        if (m < 1 || n < 1 || m > kMaxDegree || n > kMaxDegree)
            throw ConfigError("bi-degree components must lie in [1, 6]");
    }
}
