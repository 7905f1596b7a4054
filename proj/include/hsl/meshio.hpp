#pragma once
#include <string>

#include <hsl/hierarchy.hpp>

namespace hsl
{
    /// Parses the JSON mesh document. Syntactic problems throw ParseError;
    /// structural hierarchy violations are left for validateHierarchy so the
    /// CLI can report them as diagnostics. After parsing, each level's line
    /// window is extended with its outermost spacing until every domain has
    /// at least 8 cells of margin and all levels share a common window.
    HierarchicalMesh parseMesh(const std::string& text);

    /// Canonical serialization: alphabetical keys, sorted cells, rationals
    /// in lowest terms. parse(serialize(m)) == m.
    std::string serializeMesh(const HierarchicalMesh& mesh);

    HierarchicalMesh loadMeshFile(const std::string& path);
    void saveMeshFile(const HierarchicalMesh& mesh, const std::string& path);
}
