#ifndef RAINBOW_AW_JSON_HH
#define RAINBOW_AW_JSON_HH

#include <rainbow_aw/classifier.hh>
#include <rainbow_aw/coloring.hh>
#include <rainbow_aw/oracle.hh>
#include <rainbow_aw/product.hh>
#include <rainbow_aw/tree.hh>

#include <json.hpp>

#include <string_view>

// Machine-facing JSON.  Vertex ids are 0-based; product vertices are flat
// row-major ids, with 1-based "v{i},{j}" labels alongside where a human
// might read them.  Colours red, blue, green are 0, 1, 2.

namespace rainbow_aw
{
    using Json = nlohmann::ordered_json;

    auto to_json(const TreeClass & c) -> Json;
    auto to_json(const Coloring & c) -> Json;
    auto to_json(const APTriple & t, const ProductGraph * pg = nullptr) -> Json;
    auto to_json(const Lemma31Witness & w) -> Json;
    auto to_json(const Lemma31Report & report) -> Json;
    auto to_json(const AwResult & r) -> Json;
    auto to_json(const ForestAwResult & r) -> Json;
    auto to_json(const OracleOutcome & o) -> Json;
    auto to_json(const AwOracleResult & r) -> Json;
    auto edges_to_json(const Graph & g) -> Json;

    /// {"r": int, "colors": [int, ...]}; throws ColoringError on a bad document.
    auto coloring_from_json(std::string_view text) -> Coloring;
}

#endif
