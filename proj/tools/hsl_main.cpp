#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <hsl/meshio.hpp>
#include <hsl/render.hpp>

using namespace hsl;
using nlohmann::json;

namespace
{
    long long maxUnknownsFromEnv()
    {
        if (const char* env = std::getenv("HSL_MAX_UNKNOWNS"))
        {
            try
            {
                return std::stoll(env);
            }
            catch (const std::exception&)
            {
                throw ConfigError("HSL_MAX_UNKNOWNS is not an integer");
            }
        }
        return kDefaultMaxUnknowns;
    }

    struct DegreeArgs
    {
        int m = 0;
        int n = 0;

        void attach(CLI::App* cmd)
        {
            cmd->add_option("--m", m, "x-degree (defaults to the file's degrees)");
            cmd->add_option("--n", n, "y-degree (defaults to the file's degrees)");
        }

        std::pair<int, int> resolve(const HierarchicalMesh& mesh) const
        {
            int mm = m, nn = n;
            if ((mm == 0 || nn == 0) && mesh.defaultDegrees)
            {
                if (mm == 0)
                    mm = mesh.defaultDegrees->first;
                if (nn == 0)
                    nn = mesh.defaultDegrees->second;
            }
            if (mm == 0 || nn == 0)
                throw ConfigError("bi-degree required: pass --m/--n or store \"degrees\" in the file");
            checkDegrees(mm, nn);
            return {mm, nn};
        }
    };

    void emit(bool asJson, const json& doc, const std::string& text)
    {
        if (asJson)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }

    int cmdValidate(const std::string& file, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        const Diagnostics diag = validateHierarchy(mesh);
        json doc = {{"command", "validate"}, {"valid", diag.ok}};
        std::string text;
        if (diag.ok)
            text = "valid: " + std::to_string(mesh.levelCount()) + " level(s)\n";
        else
        {
            doc["level"] = diag.level;
            doc["message"] = diag.message;
            text = "invalid (level " + std::to_string(diag.level) + "): " + diag.message + "\n";
        }
        emit(asJson, doc, text);
        return diag.ok ? 0 : 1;
    }

    int cmdAdmissible(const std::string& file, int k1, int k2, bool tilde, const std::string& routeName,
                      int level, bool asJson)
    {
        OffsetRoute route = OffsetRoute::Both;
        if (routeName == "3a")
            route = OffsetRoute::ReduceK1;
        else if (routeName == "3b")
            route = OffsetRoute::ReduceK2;
        else if (routeName != "both")
            throw ConfigError("--route must be 3a, 3b or both");
        const HierarchicalMesh mesh = loadMeshFile(file);
        if (level < 0 || level >= mesh.levelCount())
            throw ConfigError("--level out of range");
        const Domain2D& dom = mesh.levels[static_cast<std::size_t>(level)].domain;
        const bool verdict = tilde ? isInnerAdmissible(dom, k1, k2, route) : isAdmissible(dom, k1, k2, route);
        json doc = {{"command", "admissible"}, {"k1", k1},      {"k2", k2},       {"tilde", tilde},
                    {"route", routeName},      {"level", level}, {"member", verdict}};
        emit(asJson, doc,
             std::string(tilde ? "inner class" : "class") + " (" + std::to_string(k1) + "," +
                 std::to_string(k2) + ") level " + std::to_string(level) + ": " +
                 (verdict ? "member" : "not a member") + "\n");
        return verdict ? 0 : 1;
    }

    json countsToJson(const FaceCounts& fc)
    {
        return {{"cells", fc.cells},
                {"inner_h_edges", fc.hEdgesInner},
                {"inner_v_edges", fc.vEdgesInner},
                {"inner_vertices", fc.verticesInner},
                {"h_edges", fc.hEdges},
                {"v_edges", fc.vEdges},
                {"vertices", fc.vertices}};
    }

    int cmdCounts(const std::string& file, int level, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        if (level >= mesh.levelCount())
            throw ConfigError("--level out of range");
        json doc = {{"command", "counts"}, {"levels", json::array()}};
        std::string text = "level      f2   f1h0   f1v0    f00    f1h    f1v     f0\n";
        for (int l = 0; l < mesh.levelCount(); ++l)
        {
            if (level >= 0 && l != level)
                continue;
            const FaceCounts fc = faceCounts(mesh.levels[static_cast<std::size_t>(l)].domain);
            json entry = countsToJson(fc);
            entry["level"] = l;
            doc["levels"].push_back(entry);
            char line[160];
            std::snprintf(line, sizeof line, "%5d %7lld %6lld %6lld %6lld %6lld %6lld %6lld\n", l, fc.cells,
                          fc.hEdgesInner, fc.vEdgesInner, fc.verticesInner, fc.hEdges, fc.vEdges, fc.vertices);
            text += line;
        }
        emit(asJson, doc, text);
        return 0;
    }

    long long hierarchyFormulaValue(const HierarchicalMesh& mesh, int m, int n)
    {
        // Telescoped closed form: per level, supports meeting R^l minus
        // those already meeting R^{l-1}, both counted by the dimension
        // formula on this level's grid.
        const auto rings = ringDomains(mesh);
        long long total = 0;
        for (int l = 0; l < mesh.levelCount(); ++l)
        {
            total += dimensionFormula(m, n, faceCounts(rings[static_cast<std::size_t>(l)]));
            if (l > 0)
            {
                HierarchicalMesh view = mesh;
                view.levels[static_cast<std::size_t>(l - 1)].domain = rings[static_cast<std::size_t>(l - 1)];
                total -= dimensionFormula(m, n, faceCounts(domainOnGrid(view, l - 1, l)));
            }
        }
        return total;
    }

    int cmdDim(const std::string& file, const DegreeArgs& degrees, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        const auto [m, n] = degrees.resolve(mesh);
        const long long formula = hierarchyFormulaValue(mesh, m, n);
        const long long count = kraftSelect(mesh, m, n).total();
        const long long oracle = dimensionOracle(leafMesh(mesh), m, n, maxUnknownsFromEnv());
        const bool agree = formula == count && count == oracle;
        json doc = {{"command", "dim"},   {"m", m},           {"n", n},     {"formula", formula},
                    {"bsplines", count},  {"oracle", oracle}, {"agree", agree}};
        emit(asJson, doc,
             "formula   " + std::to_string(formula) + "\nbsplines  " + std::to_string(count) +
                 "\noracle    " + std::to_string(oracle) + "\n" + (agree ? "AGREE" : "DISAGREE") + "\n");
        return agree ? 0 : 1;
    }

    int cmdHbasis(const std::string& file, const DegreeArgs& degrees, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        const auto [m, n] = degrees.resolve(mesh);
        const HBasisSelection sel = kraftSelect(mesh, m, n);
        json doc = {{"command", "hbasis"}, {"m", m}, {"n", n}, {"total", sel.total()},
                    {"levels", json::array()}};
        std::string text;
        for (std::size_t l = 0; l < sel.perLevel.size(); ++l)
        {
            json keys = json::array();
            text += "level " + std::to_string(l) + " (" + std::to_string(sel.perLevel[l].size()) + "):";
            for (const BSplineKey& key : sel.perLevel[l])
            {
                keys.push_back({key.i, key.j});
                text += " (" + std::to_string(key.i) + "," + std::to_string(key.j) + ")";
            }
            doc["levels"].push_back({{"level", l}, {"count", sel.perLevel[l].size()}, {"origins", keys}});
            text += "\n";
        }
        text += "total " + std::to_string(sel.total()) + "\n";
        emit(asJson, doc, text);
        return 0;
    }

    int cmdVerifyBasis(const std::string& file, const DegreeArgs& degrees, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        const auto [m, n] = degrees.resolve(mesh);
        const BasisReport report = verifyBasis(mesh, m, n, maxUnknownsFromEnv());
        json doc = {{"command", "verify-basis"},
                    {"m", m},
                    {"n", n},
                    {"selection", report.selectionSize},
                    {"dimension", report.dimension},
                    {"rank", report.rank},
                    {"ring_conditions", report.ringConditions},
                    {"conditions_hold", report.conditionsHold},
                    {"certified", report.certified}};
        std::string text = "selection " + std::to_string(report.selectionSize) + "\ndimension " +
                           std::to_string(report.dimension) + "\nrank      " + std::to_string(report.rank) +
                           "\nring conditions:";
        for (bool b : report.ringConditions)
            text += b ? " ok" : " FAIL";
        text += std::string("\n") + (report.certified ? "BASIS CERTIFIED" : "NOT CERTIFIED") + "\n";
        emit(asJson, doc, text);
        return report.certified ? 0 : 1;
    }

    int cmdVerifyPou(const std::string& file, const DegreeArgs& degrees, bool asJson)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        const auto [m, n] = degrees.resolve(mesh);
        const PouConditions conditions = checkPouConditions(mesh, m, n);
        const HBasisSelection sel = kraftSelect(mesh, m, n);
        const PouResult pou = pouWeights(mesh, m, n, sel);
        const bool certified =
            pou.status == PouResult::Status::Unique && pou.allPositive && pou.residualZero;

        json weights = json::array();
        std::string text = "conditions: " + std::string(conditions.ok() ? "ok" : "not satisfied") + "\n";
        if (pou.status == PouResult::Status::Unique)
        {
            std::size_t index = 0;
            for (std::size_t l = 0; l < sel.perLevel.size(); ++l)
                for (const BSplineKey& key : sel.perLevel[l])
                {
                    const Rational& w = pou.weights[index++];
                    weights.push_back({{"level", l}, {"origin", {key.i, key.j}}, {"weight", w.str()}});
                    text += "  level " + std::to_string(l) + " (" + std::to_string(key.i) + "," +
                            std::to_string(key.j) + ")  " + w.str() + "\n";
                }
        }
        const char* statusName = pou.status == PouResult::Status::Unique            ? "unique"
                                 : pou.status == PouResult::Status::Underdetermined ? "underdetermined"
                                                                                    : "inconsistent";
        json doc = {{"command", "verify-pou"},
                    {"m", m},
                    {"n", n},
                    {"conditions_hold", conditions.ok()},
                    {"status", statusName},
                    {"all_positive", pou.allPositive},
                    {"residual_zero", pou.residualZero},
                    {"certified", certified},
                    {"weights", weights}};
        text += std::string("status: ") + statusName + "\nall positive: " + (pou.allPositive ? "yes" : "no") +
                "\nresidual identically zero: " + (pou.residualZero ? "yes" : "no") + "\n" +
                (certified ? "POSITIVE PARTITION OF UNITY CERTIFIED" : "NOT CERTIFIED") + "\n";
        emit(asJson, doc, text);
        return certified ? 0 : 1;
    }

    int cmdRefine(const std::string& file, int level, const std::string& axisName, const std::string& coord,
                  const std::string& output)
    {
        if (axisName != "x" && axisName != "y")
            throw ConfigError("--axis must be x or y");
        const HierarchicalMesh mesh = loadMeshFile(file);
        const HierarchicalMesh refined =
            refineByLine(mesh, axisName == "x" ? Axis::X : Axis::Y, Rational::fromString(coord), level);
        saveMeshFile(refined, output);
        return 0;
    }

    int cmdRender(const std::string& file, const std::string& output, bool selection,
                  const DegreeArgs& degrees)
    {
        const HierarchicalMesh mesh = loadMeshFile(file);
        RenderOptions options;
        options.selection = selection;
        if (selection)
        {
            const auto [m, n] = degrees.resolve(mesh);
            options.m = m;
            options.n = n;
        }
        std::ofstream out(output);
        if (!out)
            throw ParseError("cannot write SVG file: " + output);
        out << renderSvg(mesh, options);
        return 0;
    }
}

int main(int argc, char** argv)
{
    CLI::App app{"hsl - verification kernel for hierarchical B-spline spaces over T-meshes"};
    app.require_subcommand(1);

    std::string file, output, routeName = "both", axisName, coord;
    int k1 = 0, k2 = 0, level = 0, countsLevel = -1;
    bool tilde = false, asJson = false, selection = false;
    DegreeArgs degrees;

    auto* validate = app.add_subcommand("validate", "structural diagnostics of a mesh file");
    validate->add_option("file", file)->required();
    validate->add_flag("--json", asJson);

    auto* admissible = app.add_subcommand("admissible", "offset-class membership of a level domain");
    admissible->add_option("--k1", k1)->required();
    admissible->add_option("--k2", k2)->required();
    admissible->add_flag("--tilde", tilde, "test the inner (complement) class");
    admissible->add_option("--route", routeName, "3a, 3b or both");
    admissible->add_option("--level", level);
    admissible->add_flag("--json", asJson);
    admissible->add_option("file", file)->required();

    auto* counts = app.add_subcommand("counts", "face counts per level");
    counts->add_option("--level", countsLevel);
    counts->add_flag("--json", asJson);
    counts->add_option("file", file)->required();

    auto* dim = app.add_subcommand("dim", "closed formula vs B-spline count vs exact rank oracle");
    degrees.attach(dim);
    dim->add_flag("--json", asJson);
    dim->add_option("file", file)->required();

    auto* hbasis = app.add_subcommand("hbasis", "hierarchical B-spline selection listing");
    degrees.attach(hbasis);
    hbasis->add_flag("--json", asJson);
    hbasis->add_option("file", file)->required();

    auto* verifyBasisCmd = app.add_subcommand("verify-basis", "certify the selection as a basis");
    degrees.attach(verifyBasisCmd);
    verifyBasisCmd->add_flag("--json", asJson);
    verifyBasisCmd->add_option("file", file)->required();

    auto* verifyPou = app.add_subcommand("verify-pou", "certify a positive weighted partition of unity");
    degrees.attach(verifyPou);
    verifyPou->add_flag("--json", asJson);
    verifyPou->add_option("file", file)->required();

    auto* refine = app.add_subcommand("refine", "insert a grid line at a level and write the result");
    refine->add_option("--level", level)->required();
    refine->add_option("--axis", axisName)->required();
    refine->add_option("--coord", coord)->required();
    refine->add_option("-o,--output", output)->required();
    refine->add_option("file", file)->required();

    auto* render = app.add_subcommand("render", "write an SVG picture of the mesh");
    render->add_option("-o,--output", output)->required();
    render->add_flag("--selection", selection, "overlay the selected supports");
    degrees.attach(render);
    render->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (validate->parsed())
            return cmdValidate(file, asJson);
        if (admissible->parsed())
            return cmdAdmissible(file, k1, k2, tilde, routeName, level, asJson);
        if (counts->parsed())
            return cmdCounts(file, countsLevel, asJson);
        if (dim->parsed())
            return cmdDim(file, degrees, asJson);
        if (hbasis->parsed())
            return cmdHbasis(file, degrees, asJson);
        if (verifyBasisCmd->parsed())
            return cmdVerifyBasis(file, degrees, asJson);
        if (verifyPou->parsed())
            return cmdVerifyPou(file, degrees, asJson);
        if (refine->parsed())
            return cmdRefine(file, level, axisName, coord, output);
        if (render->parsed())
            return cmdRender(file, output, selection, degrees);
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
