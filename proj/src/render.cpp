#include <hsl/render.hpp>

#include <array>
#include <sstream>

namespace hsl
{
    namespace
    {
        constexpr std::array<const char*, 6> kFill = {"#dbe9f6", "#fce2c4", "#d9efd3",
                                                      "#f2d7e8", "#e4dcf5", "#f5f0c8"};
        constexpr std::array<const char*, 6> kStroke = {"#1f77b4", "#e07b20", "#2e9e44",
                                                        "#c2409a", "#6a4fc0", "#b0a322"};

        std::string fmt(double v)
        {
            std::ostringstream os;
            os.setf(std::ios::fixed);
            os.precision(2);
            os << v;
            return os.str();
        }
    }

    std::string renderSvg(const HierarchicalMesh& mesh, const RenderOptions& options)
    {
        const TMeshComplex leaf = leafMesh(mesh);
        double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
        bool first = true;
        for (const MeshCell& c : leaf.cells)
        {
            const double x0 = c.x0.toDouble(), x1 = c.x1.toDouble();
            const double y0 = c.y0.toDouble(), y1 = c.y1.toDouble();
            if (first || x0 < xmin) xmin = first ? x0 : std::min(xmin, x0);
            if (first || x1 > xmax) xmax = first ? x1 : std::max(xmax, x1);
            if (first || y0 < ymin) ymin = first ? y0 : std::min(ymin, y0);
            if (first || y1 > ymax) ymax = first ? y1 : std::max(ymax, y1);
            first = false;
        }
        const double pad = 0.75;
        xmin -= pad; ymin -= pad; xmax += pad; ymax += pad;
        const double u = options.unit;
        const double width = (xmax - xmin) * u;
        const double height = (ymax - ymin) * u;
        auto px = [&](const Rational& x) { return (x.toDouble() - xmin) * u; };
        auto py = [&](const Rational& y) { return height - (y.toDouble() - ymin) * u; };   // y up

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
            << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
        svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        for (const MeshCell& c : leaf.cells)
        {
            svg << "  <rect x=\"" << fmt(px(c.x0)) << "\" y=\"" << fmt(py(c.y1)) << "\" width=\""
                << fmt((c.x1 - c.x0).toDouble() * u) << "\" height=\"" << fmt((c.y1 - c.y0).toDouble() * u)
                << "\" fill=\"" << kFill[static_cast<std::size_t>(c.level) % kFill.size()]
                << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        }
        if (options.selection)
        {
            const HBasisSelection sel = kraftSelect(mesh, options.m, options.n);
            for (std::size_t l = 0; l < sel.perLevel.size(); ++l)
            {
                const double inset = 1.5 + 2.0 * static_cast<double>(l);
                for (const BSplineKey& key : sel.perLevel[l])
                {
                    const SupportRect r = supportRect(mesh, key);
                    svg << "  <rect x=\"" << fmt(px(r.x0) + inset) << "\" y=\"" << fmt(py(r.y1) + inset)
                        << "\" width=\"" << fmt((r.x1 - r.x0).toDouble() * u - 2 * inset) << "\" height=\""
                        << fmt((r.y1 - r.y0).toDouble() * u - 2 * inset) << "\" fill=\"none\" stroke=\""
                        << kStroke[l % kStroke.size()]
                        << "\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\" opacity=\"0.75\"/>\n";
                }
            }
        }
        svg << "</svg>\n";
        return svg.str();
    }
}
