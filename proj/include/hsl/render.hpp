#pragma once
#include <string>

#include <hsl/hierarchy.hpp>

namespace hsl
{
    struct RenderOptions
    {
        bool selection = false;
        int m = 2;
        int n = 2;
        double unit = 48.0;   // pixels per coordinate unit
    };

    /// SVG picture of the leaf mesh, cells colored by level; optionally
    /// overlays the support rectangles of the hierarchical selection.
    std::string renderSvg(const HierarchicalMesh& mesh, const RenderOptions& options = {});
}
