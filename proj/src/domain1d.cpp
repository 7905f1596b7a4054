#include <hsl/domain1d.hpp>

#include <algorithm>

#include <hsl/errors.hpp>

namespace hsl
{
    namespace
    {
        void checkOrder(int k)
        {
            if (k < 0 || k > kMaxDilationOrder)
                throw ConfigError("dilatation order out of range [0, 64]");
        }

        void normalize(std::vector<CellIndex>& cells)
        {
            std::sort(cells.begin(), cells.end());
            cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        }
    }

    Domain1D::Domain1D(int parity_, std::vector<CellIndex> cells_)
        : parity(parity_ & 1), cells(std::move(cells_))
    {
        normalize(cells);
    }

    bool Domain1D::contains(CellIndex i) const
    {
        return std::binary_search(cells.begin(), cells.end(), i);
    }

    std::vector<CellRun> Domain1D::components() const
    {
        std::vector<CellRun> runs;
        for (CellIndex c : cells)
        {
            if (!runs.empty() && runs.back().last + 1 == c)
                runs.back().last = c;
            else
                runs.push_back({c, c});
        }
        return runs;
    }

    Domain1D dilate(const Domain1D& dom, int k)
    {
        checkOrder(k);
        const int q = (dom.parity + k) & 1;
        if (k == 0)
            return dom;
        // Component [a, b] spans [2a + p, 2b + p + 2] on the doubled lattice;
        // growing by k half-steps and reading back cells of parity q gives
        // the closed-form index range below.
        std::vector<CellIndex> out;
        const int p = dom.parity;
        for (const CellRun& run : dom.components())
        {
            const CellIndex lo = run.first + (p - q - k) / 2;
            const CellIndex hi = run.last + (k + p - q) / 2;
            for (CellIndex c = lo; c <= hi; ++c)
                out.push_back(c);
        }
        return Domain1D(q, std::move(out));
    }

    bool admitsOffset(const Domain1D& dom, int k)
    {
        checkOrder(k);
        const auto runs = dom.components();
        for (std::size_t i = 1; i < runs.size(); ++i)
        {
            const CellIndex gap = runs[i].first - runs[i - 1].last - 1;
            if (gap <= k)
                return false;
        }
        return true;
    }

    long long splineSpaceDimension(int degree, const Domain1D& dom)
    {
        if (degree < 1)
            throw ConfigError("spline degree must be >= 1");
        const long long f1 = static_cast<long long>(dom.cells.size());
        const long long innerNodes = f1 - componentCount(dom);
        return (degree + 1) * f1 - degree * innerNodes;
    }

    std::vector<CellIndex> effectiveBsplineStarts(int degree, const Domain1D& dom)
    {
        if (degree < 1)
            throw ConfigError("spline degree must be >= 1");
        std::vector<CellIndex> starts;
        for (const CellRun& run : dom.components())
            for (CellIndex i = run.first - degree; i <= run.last; ++i)
                starts.push_back(i);
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
        return starts;
    }

    Domain1D unionOf(const Domain1D& a, const Domain1D& b)
    {
        if (a.empty())
            return b;
        if (b.empty())
            return a;
        if (a.parity != b.parity)
            throw ConfigError("union of domains on different lattices");
        std::vector<CellIndex> cells;
        cells.reserve(a.cells.size() + b.cells.size());
        std::merge(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(), std::back_inserter(cells));
        return Domain1D(a.parity, std::move(cells));
    }

    Domain1D cellIntersection(const Domain1D& a, const Domain1D& b)
    {
        if (a.empty() || b.empty())
            return Domain1D(a.parity, {});
        if (a.parity != b.parity)
            throw ConfigError("intersection of domains on different lattices");
        std::vector<CellIndex> cells;
        std::set_intersection(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                              std::back_inserter(cells));
        return Domain1D(a.parity, std::move(cells));
    }

    bool intersectionIsCellUnion(const Domain1D& a, const Domain1D& b)
    {
        if (a.empty() || b.empty())
            return true;
        if (a.parity != b.parity)
            throw ConfigError("intersection of domains on different lattices");
        const Domain1D shared = cellIntersection(a, b);
        // Every node common to both point sets must touch a shared cell.
        auto hasNode = [](const Domain1D& d, CellIndex v) { return d.contains(v - 1) || d.contains(v); };
        for (CellIndex c : a.cells)
        {
            for (CellIndex v : {c, c + 1})
                if (hasNode(b, v) && !(shared.contains(v - 1) || shared.contains(v)))
                    return false;
        }
        return true;
    }

    Domain1D splitCell(const Domain1D& dom, CellIndex at)
    {
        std::vector<CellIndex> cells;
        cells.reserve(dom.cells.size() + 1);
        for (CellIndex c : dom.cells)
        {
            if (c < at)
                cells.push_back(c);
            else if (c == at)
            {
                cells.push_back(at);
                cells.push_back(at + 1);
            }
            else
                cells.push_back(c + 1);
        }
        return Domain1D(dom.parity, std::move(cells));
    }

    long long componentCount(const Domain1D& dom)
    {
        long long count = 0;
        CellIndex prev = 0;
        bool first = true;
        for (CellIndex c : dom.cells)
        {
            if (first || c != prev + 1)
                ++count;
            prev = c;
            first = false;
        }
        return count;
    }
}
