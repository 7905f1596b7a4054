#pragma once
#include <hsl/domain2d.hpp>

namespace hsl
{
    /// Minkowski growth by k1/2 horizontally and k2/2 vertically; the result
    /// lives on the lattice of parity ((px+k1) mod 2, (py+k2) mod 2).
    Domain2D dilate(const Domain2D& dom, int k1, int k2);

    /// Closed-form face counts of the dilated domain. Valid when the input
    /// counts come from a domain admitting the (k1,k2) offsets; callers own
    /// that precondition.
    FaceCounts dilatedFaceCounts(const FaceCounts& c, int k1, int k2);
}
