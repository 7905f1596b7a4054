#include <hsl/admissible.hpp>

#include <unordered_map>

#include <hsl/errors.hpp>

namespace hsl
{
    namespace
    {
        struct MemoKey
        {
            int k1, k2, route, px, py;
            std::vector<GridCell> cells;

            friend bool operator==(const MemoKey&, const MemoKey&) = default;
        };

        struct MemoKeyHash
        {
            std::size_t operator()(const MemoKey& k) const
            {
                std::size_t h = 1469598103934665603ull;
                auto mix = [&h](std::size_t v) {
                    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                };
                mix(static_cast<std::size_t>(k.k1));
                mix(static_cast<std::size_t>(k.k2));
                mix(static_cast<std::size_t>(k.route));
                mix(static_cast<std::size_t>(k.px * 2 + k.py));
                for (const GridCell& c : k.cells)
                {
                    mix(static_cast<std::size_t>(c.x));
                    mix(static_cast<std::size_t>(c.y));
                }
                return h;
            }
        };

        thread_local std::unordered_map<MemoKey, bool, MemoKeyHash> gMemo;

        bool projectionsAdmitGap(const std::vector<Domain1D>& projections)
        {
            for (const Domain1D& p : projections)
                if (!admitsOffset(p, 1))
                    return false;
            for (const Domain1D& p : sigmaExtend(projections))
                if (!admitsOffset(p, 1))
                    return false;
            return true;
        }

        bool evalRoute(const Domain2D& dom, int k1, int k2, bool reduceK1First)
        {
            if (k1 == 0 && k2 == 0)
                return isManifold(dom);
            Domain2D cur = dom;
            if (reduceK1First)
            {
                // Peel k1 in the recursion: vertical half-offsets run at
                // k1 = 0, horizontal ones at the full k2.
                for (int j = 0; j < k2; ++j)
                {
                    if (!admitsVerticalHalfOffset(cur))
                        return false;
                    cur = dilate(cur, 0, 1);
                }
                for (int i = 0; i < k1; ++i)
                {
                    if (!admitsHorizontalHalfOffset(cur))
                        return false;
                    cur = dilate(cur, 1, 0);
                }
            }
            else
            {
                for (int i = 0; i < k1; ++i)
                {
                    if (!admitsHorizontalHalfOffset(cur))
                        return false;
                    cur = dilate(cur, 1, 0);
                }
                for (int j = 0; j < k2; ++j)
                {
                    if (!admitsVerticalHalfOffset(cur))
                        return false;
                    cur = dilate(cur, 0, 1);
                }
            }
            return true;
        }
    }

    bool admitsHorizontalHalfOffset(const Domain2D& dom)
    {
        return isManifold(dom) && projectionsAdmitGap(rowProjections(dom));
    }

    bool admitsVerticalHalfOffset(const Domain2D& dom)
    {
        return isManifold(dom) && projectionsAdmitGap(columnProjections(dom));
    }

    bool isAdmissible(const Domain2D& dom, int k1, int k2, OffsetRoute route)
    {
        if (k1 < 0 || k2 < 0 || k1 > kMaxDilationOrder || k2 > kMaxDilationOrder)
            throw ConfigError("offset class order out of range [0, 64]");
        if (dom.empty())
            return true;

        MemoKey key{k1, k2, static_cast<int>(route), dom.parity.x, dom.parity.y, dom.cells};
        if (auto it = gMemo.find(key); it != gMemo.end())
            return it->second;

        bool verdict = false;
        switch (route)
        {
            case OffsetRoute::ReduceK1: verdict = evalRoute(dom, k1, k2, true); break;
            case OffsetRoute::ReduceK2: verdict = evalRoute(dom, k1, k2, false); break;
            case OffsetRoute::Both:
            {
                const bool a = evalRoute(dom, k1, k2, true);
                const bool b = evalRoute(dom, k1, k2, false);
                if (a != b)
                    throw InternalError("offset-class recursion orders disagree");
                verdict = a;
                break;
            }
        }
        if (gMemo.size() > 200000)
            gMemo.clear();
        gMemo.emplace(std::move(key), verdict);
        return verdict;
    }

    bool isInnerAdmissible(const Domain2D& dom, int k1, int k2, OffsetRoute route, int extraPadding)
    {
        if (k1 < 0 || k2 < 0 || k1 > kMaxDilationOrder || k2 > kMaxDilationOrder)
            throw ConfigError("offset class order out of range [0, 64]");
        if (extraPadding < 0)
            throw ConfigError("negative padding");
        if (dom.empty())
            return true;   // complement of nothing inside a rectangle is the rectangle
        if (!isManifold(dom))
            return false;

        const CellIndex pad = std::max(k1, k2) + 2 + extraPadding;
        const auto box = dom.boundingBox();
        std::vector<GridCell> complement;
        for (CellIndex y = box.ymin - pad; y <= box.ymax + pad; ++y)
            for (CellIndex x = box.xmin - pad; x <= box.xmax + pad; ++x)
                if (!dom.contains(x, y))
                    complement.push_back({x, y});
        return isAdmissible(Domain2D(dom.parity, std::move(complement)), k1, k2, route);
    }

    void clearAdmissibilityCache() { gMemo.clear(); }
}
