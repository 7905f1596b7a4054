#pragma once
#include <random>
#include <vector>

#include <hsl/admissible.hpp>
#include <hsl/domain1d.hpp>
#include <hsl/domain2d.hpp>

namespace hsl::testing
{
    using Rng = std::mt19937_64;

    inline Domain1D randomDomain1D(Rng& rng, int window = 40, double fill = 0.35, int parity = 0)
    {
        std::bernoulli_distribution occupied(fill);
        std::vector<CellIndex> cells;
        for (int i = 0; i < window; ++i)
            if (occupied(rng))
                cells.push_back(i);
        return Domain1D(parity, std::move(cells));
    }

    /// Random segments separated by gaps of at least minGap cells.
    inline Domain1D randomGappedDomain1D(Rng& rng, int window = 30, int minGap = 2, int parity = 0)
    {
        std::uniform_int_distribution<int> seg(1, 4);
        std::uniform_int_distribution<int> extraGap(0, 3);
        std::vector<CellIndex> cells;
        int x = static_cast<int>(rng() % 4);
        while (x < window)
        {
            const int len = seg(rng);
            for (int i = 0; i < len && x + i < window; ++i)
                cells.push_back(x + i);
            x += len + minGap + extraGap(rng);
        }
        return Domain1D(parity, std::move(cells));
    }

    /// Union of a few random rectangles; usually (not always) a manifold.
    inline Domain2D randomRectUnion(Rng& rng, int window = 10, int maxRects = 3)
    {
        std::uniform_int_distribution<int> rectCount(1, maxRects);
        std::uniform_int_distribution<int> pos(0, window - 1);
        std::uniform_int_distribution<int> extent(1, std::max(1, window / 2 + 1));
        std::vector<GridCell> cells;
        const int rects = rectCount(rng);
        for (int r = 0; r < rects; ++r)
        {
            const int x0 = pos(rng), y0 = pos(rng);
            const int w = extent(rng), h = extent(rng);
            for (int x = x0; x < std::min(window, x0 + w); ++x)
                for (int y = y0; y < std::min(window, y0 + h); ++y)
                    cells.push_back({x, y});
        }
        return Domain2D({0, 0}, std::move(cells));
    }

    inline Domain2D randomManifoldDomain(Rng& rng, int window = 10, int maxRects = 3)
    {
        for (;;)
        {
            Domain2D dom = randomRectUnion(rng, window, maxRects);
            if (!dom.empty() && isManifold(dom))
                return dom;
        }
    }

    /// Random cell soup with checkerboard pinches repaired by filling; used
    /// where gnarly shapes matter more than admissibility.
    inline Domain2D randomSoupDomain(Rng& rng, int window = 8, double fill = 0.5)
    {
        std::bernoulli_distribution occupied(fill);
        std::vector<GridCell> cells;
        for (int x = 0; x < window; ++x)
            for (int y = 0; y < window; ++y)
                if (occupied(rng))
                    cells.push_back({x, y});
        Domain2D dom({0, 0}, std::move(cells));
        for (bool changed = true; changed;)
        {
            changed = false;
            std::vector<GridCell> extra;
            for (const GridCell& c : dom.cells)
                for (CellIndex vx : {c.x, c.x + 1})
                    for (CellIndex vy : {c.y, c.y + 1})
                    {
                        const bool ll = dom.contains(vx - 1, vy - 1), lr = dom.contains(vx, vy - 1);
                        const bool ul = dom.contains(vx - 1, vy), ur = dom.contains(vx, vy);
                        if (ll && ur && !lr && !ul)
                            extra.push_back({vx, vy - 1});
                        else if (lr && ul && !ll && !ur)
                            extra.push_back({vx - 1, vy - 1});
                    }
            if (!extra.empty())
            {
                changed = true;
                std::vector<GridCell> merged = dom.cells;
                merged.insert(merged.end(), extra.begin(), extra.end());
                dom = Domain2D({0, 0}, std::move(merged));
            }
        }
        return dom;
    }

    inline Domain2D randomAdmissibleDomain(Rng& rng, int k1, int k2, int window = 10, int maxRects = 3)
    {
        for (;;)
        {
            Domain2D dom = randomManifoldDomain(rng, window, maxRects);
            if (isAdmissible(dom, k1, k2))
                return dom;
        }
    }
}
