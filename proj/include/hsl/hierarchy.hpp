#pragma once
#include <optional>
#include <string>
#include <vector>

#include <hsl/admissible.hpp>
#include <hsl/bspline.hpp>
#include <hsl/splinespace.hpp>
#include <hsl/tmesh.hpp>

namespace hsl
{
    struct MeshLevel
    {
        Grid2 grid;
        Domain2D domain;   // cells of this level's grid, parity (0,0)
    };

    /// Nested domains over nested grids. Level 0 is the coarsest; the
    /// domain of level l+1 lies inside the domain of level l and its
    /// boundary is aligned with the level-l grid.
    struct HierarchicalMesh
    {
        std::vector<MeshLevel> levels;
        std::optional<std::pair<int, int>> defaultDegrees;

        int levelCount() const { return static_cast<int>(levels.size()); }
    };

    struct Diagnostics
    {
        bool ok = true;
        int level = -1;
        std::string message;
    };

    /// Checks grid nesting, domain nesting and boundary alignment; returns
    /// the first violation found.
    Diagnostics validateHierarchy(const HierarchicalMesh& mesh);

    /// Re-expresses the level-`domLevel` domain as cells of the
    /// level-`gridLevel` grid. Coarsening requires exact alignment.
    Domain2D domainOnGrid(const HierarchicalMesh& mesh, int domLevel, int gridLevel);

    /// R^l = Omega^0 \ Omega^{l+1} as cells of grid level l; the last ring
    /// is Omega^0 itself.
    std::vector<Domain2D> ringDomains(const HierarchicalMesh& mesh);

    /// Ring admissibility of order (m-1, n-1) per level.
    std::vector<bool> checkBasisConditions(const HierarchicalMesh& mesh, int m, int n);

    struct PouConditions
    {
        bool baseAdmissible = false;        // Omega^0 in the (m-1,n-1) class on G^0
        std::vector<bool> innerAdmissible;  // Omega^l in the inner (m,n) class on G^{l-1}
        bool boundariesDisjoint = false;    // boundary of Omega^0 vs Omega^1
        bool ok() const;
    };
    PouConditions checkPouConditions(const HierarchicalMesh& mesh, int m, int n);

    /// Hierarchical B-spline selection: per level, supports that have left
    /// the previous ring entirely but still meet the current ring.
    struct HBasisSelection
    {
        std::vector<std::vector<BSplineKey>> perLevel;
        long long total() const;
    };
    HBasisSelection kraftSelect(const HierarchicalMesh& mesh, int m, int n);

    /// Inserts a line into the grids of levels j..N-1 (no-op per level when
    /// already present); domains are unchanged as point sets.
    HierarchicalMesh refineByLine(const HierarchicalMesh& mesh, Axis axis, const Rational& coord, int level);

    /// Leaf T-mesh: cells of G^l inside Omega^l \ Omega^{l+1}, all levels.
    TMeshComplex leafMesh(const HierarchicalMesh& mesh);

    /// Geometric support rectangle of a key on its level grid.
    struct SupportRect
    {
        Rational x0, x1, y0, y1;
    };
    SupportRect supportRect(const HierarchicalMesh& mesh, const BSplineKey& key);

    /// Per-cell coefficient rows of every selected B-spline over the leaf
    /// cells (shared by the rank certificate and the weight solve).
    std::vector<SparseRatRow> selectionCellCoefficients(const HierarchicalMesh& mesh, int m, int n,
                                                        const HBasisSelection& sel,
                                                        const TMeshComplex& leaf);

    struct PouResult
    {
        enum class Status
        {
            Unique,
            Underdetermined,
            Inconsistent
        };
        Status status = Status::Inconsistent;
        std::vector<Rational> weights;
        bool allPositive = false;
        bool residualZero = false;
    };

    /// Solves sum w_tau tau == 1 on Omega^0 exactly and reports positivity
    /// and the exact residual status. A non-unique system is reported, not
    /// thrown; it would contradict a certified basis.
    PouResult pouWeights(const HierarchicalMesh& mesh, int m, int n, const HBasisSelection& sel);

    struct BasisReport
    {
        long long selectionSize = 0;
        long long dimension = 0;
        long long rank = 0;
        std::vector<bool> ringConditions;
        bool conditionsHold = false;
        bool certified = false;   // selectionSize == rank == dimension
    };
    BasisReport verifyBasis(const HierarchicalMesh& mesh, int m, int n,
                            long long maxUnknowns = kDefaultMaxUnknowns);

    /// After refining at `level`, every selected key of the refined mesh at
    /// levels >= level must fit inside the support of a selected key of the
    /// original mesh on the same level.
    bool checkSupportNesting(const HierarchicalMesh& original, const HierarchicalMesh& refined, int m, int n,
                             int level, BSplineKey* counterexample = nullptr);
}
