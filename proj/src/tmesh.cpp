#include <hsl/tmesh.hpp>

#include <algorithm>
#include <map>

#include <hsl/errors.hpp>

namespace hsl
{
    TMeshComplex singleLevelMesh(const Grid2& grid, const Domain2D& dom, int level)
    {
        TMeshComplex mesh;
        mesh.cells.reserve(dom.cells.size());
        for (const GridCell& c : dom.cells)
        {
            if (!grid.cellInWindow(c))
                throw WindowError("domain cell outside the stored grid window");
            mesh.cells.push_back(MeshCell{level, c, grid.line(Axis::X, c.x), grid.line(Axis::X, c.x + 1),
                                          grid.line(Axis::Y, c.y), grid.line(Axis::Y, c.y + 1)});
        }
        mesh.interfaces = buildInterfaces(mesh.cells);
        return mesh;
    }

    std::vector<MeshInterface> buildInterfaces(const std::vector<MeshCell>& cells)
    {
        std::vector<MeshInterface> out;
        // Match right edges against left edges grouped by line coordinate,
        // then bottom against top.
        for (const Axis normal : {Axis::X, Axis::Y})
        {
            std::map<Rational, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> byLine;
            for (std::size_t id = 0; id < cells.size(); ++id)
            {
                const MeshCell& c = cells[id];
                if (normal == Axis::X)
                {
                    byLine[c.x1].first.push_back(id);
                    byLine[c.x0].second.push_back(id);
                }
                else
                {
                    byLine[c.y1].first.push_back(id);
                    byLine[c.y0].second.push_back(id);
                }
            }
            for (const auto& [coord, sides] : byLine)
            {
                for (std::size_t a : sides.first)
                    for (std::size_t b : sides.second)
                    {
                        const MeshCell& ca = cells[a];
                        const MeshCell& cb = cells[b];
                        const Rational lo =
                            normal == Axis::X ? std::max(ca.y0, cb.y0) : std::max(ca.x0, cb.x0);
                        const Rational hi =
                            normal == Axis::X ? std::min(ca.y1, cb.y1) : std::min(ca.x1, cb.x1);
                        if (lo < hi)
                            out.push_back(MeshInterface{a, b, normal, coord, lo, hi});
                    }
            }
        }
        std::sort(out.begin(), out.end(), [](const MeshInterface& l, const MeshInterface& r) {
            if (l.normal != r.normal)
                return l.normal == Axis::X;
            if (l.coord != r.coord)
                return l.coord < r.coord;
            if (l.lo != r.lo)
                return l.lo < r.lo;
            return std::pair(l.a, l.b) < std::pair(r.a, r.b);
        });
        return out;
    }
}
