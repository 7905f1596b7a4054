#include <hsl/meshio.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <hsl/errors.hpp>

namespace hsl
{
    namespace
    {
        constexpr CellIndex kLoadMargin = 8;

        Rational parseCoordinate(const nlohmann::json& j)
        {
            if (j.is_string())
                return Rational::fromString(j.get<std::string>());
            if (j.is_number_integer())
                return Rational(j.get<long long>());
            throw ParseError("grid line must be an integer or a \"p/q\" string");
        }

        std::vector<Rational> parseLines(const nlohmann::json& j, const char* name)
        {
            if (!j.is_array() || j.size() < 2)
                throw ParseError(std::string(name) + " must be an array of at least two coordinates");
            std::vector<Rational> lines;
            lines.reserve(j.size());
            for (const auto& item : j)
                lines.push_back(parseCoordinate(item));
            for (std::size_t i = 1; i < lines.size(); ++i)
                if (!(lines[i - 1] < lines[i]))
                    throw ParseError(std::string(name) + " must be strictly increasing");
            return lines;
        }

        /// Extends one axis window so the domain's index range keeps at
        /// least `margin` cells on each side and the window covers
        /// [targetLo, targetHi]; new lines repeat the outermost spacing.
        void extendAxis(std::vector<Rational>& lines, std::vector<GridCell>& cells, bool alongX,
                        CellIndex lowCell, CellIndex highCell, CellIndex margin, const Rational* targetLo,
                        const Rational* targetHi)
        {
            const Rational stepLo = lines[1] - lines[0];
            const Rational stepHi = lines[lines.size() - 1] - lines[lines.size() - 2];
            long long addLo = std::max<long long>(0, margin - lowCell);
            long long addHi =
                std::max<long long>(0, highCell + margin - (static_cast<CellIndex>(lines.size()) - 2));
            Rational lo = lines.front() - Rational(addLo) * stepLo;
            while (targetLo && *targetLo < lo)
            {
                lo -= stepLo;
                ++addLo;
            }
            Rational hi = lines.back() + Rational(addHi) * stepHi;
            while (targetHi && hi < *targetHi)
            {
                hi += stepHi;
                ++addHi;
            }
            if (addLo > 0)
            {
                std::vector<Rational> front;
                for (long long i = addLo; i >= 1; --i)
                    front.push_back(lines.front() - Rational(i) * stepLo);
                lines.insert(lines.begin(), front.begin(), front.end());
                for (GridCell& c : cells)
                    (alongX ? c.x : c.y) += addLo;
            }
            for (long long i = 1; i <= addHi; ++i)
                lines.push_back(lines.back() + stepHi);
        }

        void establishMargins(HierarchicalMesh& mesh)
        {
            // First pass: per-level margins around that level's own domain.
            for (MeshLevel& lev : mesh.levels)
            {
                if (lev.domain.empty())
                    continue;
                const auto box = lev.domain.boundingBox();
                std::vector<GridCell> cells = lev.domain.cells;
                extendAxis(lev.grid.xs, cells, true, box.xmin, box.xmax, kLoadMargin, nullptr, nullptr);
                extendAxis(lev.grid.ys, cells, false, box.ymin, box.ymax, kLoadMargin, nullptr, nullptr);
                lev.domain = Domain2D({0, 0}, std::move(cells));
            }
            // Second pass: grow every level to the common window.
            Rational xlo = mesh.levels.front().grid.xs.front(), xhi = mesh.levels.front().grid.xs.back();
            Rational ylo = mesh.levels.front().grid.ys.front(), yhi = mesh.levels.front().grid.ys.back();
            for (const MeshLevel& lev : mesh.levels)
            {
                xlo = std::min(xlo, lev.grid.xs.front());
                xhi = std::max(xhi, lev.grid.xs.back());
                ylo = std::min(ylo, lev.grid.ys.front());
                yhi = std::max(yhi, lev.grid.ys.back());
            }
            for (MeshLevel& lev : mesh.levels)
            {
                std::vector<GridCell> cells = lev.domain.cells;
                extendAxis(lev.grid.xs, cells, true, 0, -1, 0, &xlo, &xhi);
                extendAxis(lev.grid.ys, cells, false, 0, -1, 0, &ylo, &yhi);
                lev.domain = Domain2D({0, 0}, std::move(cells));
            }
        }
    }

    HierarchicalMesh parseMesh(const std::string& text)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception& e)
        {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("levels") || !doc["levels"].is_array() || doc["levels"].empty())
            throw ParseError("mesh document needs a non-empty \"levels\" array");

        HierarchicalMesh mesh;
        if (doc.contains("degrees"))
        {
            const auto& d = doc["degrees"];
            if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
                throw ParseError("\"degrees\" must be an [m, n] integer pair");
            mesh.defaultDegrees = {d[0].get<int>(), d[1].get<int>()};
        }
        for (const auto& jlev : doc["levels"])
        {
            if (!jlev.is_object())
                throw ParseError("each level must be an object");
            MeshLevel lev;
            try
            {
                lev.grid = Grid2(parseLines(jlev.value("x_lines", nlohmann::json::array()), "x_lines"),
                                 parseLines(jlev.value("y_lines", nlohmann::json::array()), "y_lines"));
            }
            catch (const ConfigError& e)
            {
                throw ParseError(e.what());
            }
            if (!jlev.contains("cells") || !jlev["cells"].is_array())
                throw ParseError("each level needs a \"cells\" array");
            std::vector<GridCell> cells;
            for (const auto& jc : jlev["cells"])
            {
                if (!jc.is_array() || jc.size() != 2 || !jc[0].is_number_integer() || !jc[1].is_number_integer())
                    throw ParseError("cells must be [i, j] integer pairs");
                const GridCell c{jc[0].get<long long>(), jc[1].get<long long>()};
                if (!lev.grid.cellInWindow(c))
                    throw ParseError("cell index outside the level's grid window");
                cells.push_back(c);
            }
            lev.domain = Domain2D({0, 0}, std::move(cells));
            mesh.levels.push_back(std::move(lev));
        }
        establishMargins(mesh);
        return mesh;
    }

    std::string serializeMesh(const HierarchicalMesh& mesh)
    {
        nlohmann::json doc;
        if (mesh.defaultDegrees)
            doc["degrees"] = {mesh.defaultDegrees->first, mesh.defaultDegrees->second};
        doc["levels"] = nlohmann::json::array();
        for (const MeshLevel& lev : mesh.levels)
        {
            nlohmann::json jlev;
            auto lineArray = [](const std::vector<Rational>& lines) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Rational& r : lines)
                    arr.push_back(r.str());
                return arr;
            };
            jlev["x_lines"] = lineArray(lev.grid.xs);
            jlev["y_lines"] = lineArray(lev.grid.ys);
            std::vector<GridCell> cells = lev.domain.cells;
            std::sort(cells.begin(), cells.end(),
                      [](const GridCell& a, const GridCell& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
            nlohmann::json jcells = nlohmann::json::array();
            for (const GridCell& c : cells)
                jcells.push_back({c.x, c.y});
            jlev["cells"] = std::move(jcells);
            doc["levels"].push_back(std::move(jlev));
        }
        return doc.dump(2) + "\n";
    }

    HierarchicalMesh loadMeshFile(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open mesh file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parseMesh(buffer.str());
    }

    void saveMeshFile(const HierarchicalMesh& mesh, const std::string& path)
    {
        std::ofstream out(path);
        if (!out)
            throw ParseError("cannot write mesh file: " + path);
        out << serializeMesh(mesh);
    }
}
