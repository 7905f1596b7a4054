#pragma once
#include <hsl/dilation.hpp>
#include <hsl/domain2d.hpp>

namespace hsl
{
    /// The two-dimensional offset classes are defined by a recursion that may
    /// peel either index first; both orders define the same class, and
    /// `Both` evaluates the two and cross-checks them.
    enum class OffsetRoute
    {
        ReduceK1,   // CLI "3a"
        ReduceK2,   // CLI "3b"
        Both
    };

    /// Does the domain admit a half-step horizontal offset (manifold and all
    /// row projections, plus their sigma-extensions, admit a 1-cell gap)?
    bool admitsHorizontalHalfOffset(const Domain2D& dom);
    bool admitsVerticalHalfOffset(const Domain2D& dom);

    /// Membership in the admissible class of order (k1, k2). Non-manifold
    /// domains are in no class; the empty domain is in every class.
    bool isAdmissible(const Domain2D& dom, int k1, int k2, OffsetRoute route = OffsetRoute::Both);

    /// Admissibility "from inside": the complement within an enclosing
    /// rectangle (bounding box padded by max(k1,k2)+2+extraPadding cells)
    /// belongs to the (k1,k2) class.
    bool isInnerAdmissible(const Domain2D& dom, int k1, int k2, OffsetRoute route = OffsetRoute::Both,
                           int extraPadding = 0);

    /// Drops the per-thread verdict memo (mainly for benchmarks and tests).
    void clearAdmissibilityCache();
}
