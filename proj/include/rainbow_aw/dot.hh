#ifndef RAINBOW_AW_DOT_HH
#define RAINBOW_AW_DOT_HH

#include <rainbow_aw/coloring.hh>
#include <rainbow_aw/graph.hh>
#include <rainbow_aw/product.hh>

#include <optional>
#include <string>
#include <string_view>

// DOT export.  Node ids are "n{id}" with the 0-based vertex id, which is also
// the reverse mapping parse_dot uses; labels are 1-based "v{i}" or "v{i},{j}".

namespace rainbow_aw
{
    auto to_dot(const Graph & g, const std::optional<Coloring> & coloring = std::nullopt) -> std::string;
    auto to_dot(const ProductGraph & pg, const std::optional<Coloring> & coloring = std::nullopt) -> std::string;

    /// Reads back graphs written by to_dot.
    auto parse_dot(std::string_view text) -> Graph;
}

#endif
