#pragma once

#include <string>

#include "equigo/goettsche.hpp"

namespace equigo::cli {

enum class Format { Json, Csv, Pretty };

struct RenderContext {
    std::string command;
    std::string surface;
    /// Slice indices present in the series, in output order.
    std::vector<int> elements;
};

/// "1 + 20*u*v - u^2*v^3" style rendering of a (u, v) polynomial; "0" when zero.
std::string render_uv(const UVPoly& p);

std::string render_series(const EquivariantSeries& s, const RenderContext& ctx, Format format);
/// Irreducible multiplicities of every coefficient (E-signs applied).
std::string render_decomposition(const EquivariantSeries& s, const RenderContext& ctx, Format format);

} // namespace equigo::cli
