#pragma once
#include <cstdint>

namespace hsl
{
    using CellIndex = std::int64_t;

    enum class Axis
    {
        X,
        Y
    };

    inline Axis otherAxis(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

    /// Dilatation orders beyond this would be outside any sane verification
    /// run; rejecting them keeps index arithmetic trivially overflow-free.
    inline constexpr int kMaxDilationOrder = 64;
}
