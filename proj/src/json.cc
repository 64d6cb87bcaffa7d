#include <rainbow_aw/json.hh>

namespace rainbow_aw
{
    auto to_json(const TreeClass & c) -> Json
    {
        Json j;
        j["kind"] = to_string(c.kind);
        j["diameter"] = c.diameter;
        j["parity"] = to_string(c.parity);
        j["is_p2"] = c.is_p2;
        j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        j["peripheral_triple"] = c.peripheral_triple ? Json(c.peripheral_triple->vertices) : Json(nullptr);
        return j;
    }

    auto to_json(const Coloring & c) -> Json
    {
        Json j;
        j["r"] = c.palette();
        j["colors"] = Json(std::vector<int>(c.colors().begin(), c.colors().end()));
        return j;
    }

    auto to_json(const APTriple & t, const ProductGraph * pg) -> Json
    {
        Json j;
        j["flat"] = {t.x, t.y, t.z};
        j["d"] = t.d;
        if (pg)
            j["labels"] = {pg->label(t.x), pg->label(t.y), pg->label(t.z)};
        return j;
    }

    auto to_json(const Lemma31Witness & w) -> Json
    {
        return Json{{"u1", w.u1}, {"w1", w.w1}, {"j", w.j}, {"k", w.k}};
    }

    auto to_json(const Lemma31Report & report) -> Json
    {
        Json j;
        for (auto * check : report.checks()) {
            Json entry;
            entry["pass"] = check->passed;
            if (! check->passed) {
                entry["detail"] = check->detail;
                entry["counterexample"] = check->counterexample;
            }
            j[check->name] = entry;
        }
        j["all_passed"] = report.all_passed();
        return j;
    }

    auto to_json(const AwResult & r) -> Json
    {
        Json j;
        j["aw"] = r.value;
        j["rule"] = to_string(r.rule);
        j["rule_number"] = rule_number(r.rule);
        j["product_diameter"] = r.product_diameter;
        j["factors"] = {to_json(r.first), to_json(r.second)};

        Json w = Json::object();
        if (r.deciding_factor)
            w["factor"] = *r.deciding_factor == Factor::first ? "first" : "second";
        if (r.peripheral_triple)
            w["peripheral_triple"] = r.peripheral_triple->vertices;
        if (r.weakly_witness)
            w["weakly_vertex"] = *r.weakly_witness;
        if (r.lemma31)
            w["lemma31"] = to_json(*r.lemma31);
        if (r.diametral_pair)
            w["diametral_pair"] = Json{{"a1", r.diametral_pair->a1}, {"a2", r.diametral_pair->a2},
                {"b1", r.diametral_pair->b1}, {"b2", r.diametral_pair->b2}};
        if (r.coloring)
            w["coloring"] = to_json(*r.coloring);
        j["witnesses"] = w;
        return j;
    }

    auto to_json(const ForestAwResult & r) -> Json
    {
        Json j;
        j["aw"] = r.value;
        j["p"] = r.p_count;
        j["s"] = r.s_count;
        j["disconnected_formula"] = r.disconnected_formula;
        Json table = Json::array();
        for (auto & c : r.components)
            table.push_back(Json{{"first_component", c.first_component}, {"second_component", c.second_component},
                {"first_order", c.first_order}, {"second_order", c.second_order}, {"aw", c.aw},
                {"rule", to_string(c.rule)}});
        j["components"] = table;
        return j;
    }

    auto to_json(const OracleOutcome & o) -> Json
    {
        Json j;
        j["status"] = to_string(o.status);
        j["nodes"] = o.stats.nodes;
        j["ms"] = o.stats.milliseconds;
        if (! o.note.empty())
            j["note"] = o.note;
        if (o.coloring)
            j["coloring"] = to_json(*o.coloring);
        return j;
    }

    auto to_json(const AwOracleResult & r) -> Json
    {
        Json j;
        j["aw"] = r.value ? Json(*r.value) : Json("inconclusive");
        j["capped_by_bound"] = r.capped_by_bound;
        j["nodes"] = r.total.nodes;
        j["ms"] = r.total.milliseconds;
        Json runs = Json::array();
        for (auto & run : r.runs) {
            auto entry = to_json(run.outcome);
            entry["r"] = run.colors;
            runs.push_back(entry);
        }
        j["runs"] = runs;
        return j;
    }

    auto edges_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        return edges;
    }

    auto coloring_from_json(std::string_view text) -> Coloring
    {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ColoringError(std::string("bad colouring JSON: ") + e.what());
        }
        if (! j.is_object() || ! j.contains("r") || ! j.contains("colors") || ! j["r"].is_number_integer() ||
            ! j["colors"].is_array())
            throw ColoringError("colouring JSON must be {\"r\": int, \"colors\": [int, ...]}");

        std::vector<int> colors;
        for (auto & c : j["colors"]) {
            if (! c.is_number_integer())
                throw ColoringError("colour entries must be integers");
            colors.push_back(c.get<int>());
        }
        return Coloring(std::move(colors), j["r"].get<int>());
    }
}
