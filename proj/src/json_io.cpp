#include "boundrep/json_io.hpp"

#include "json.hpp"

namespace boundrep {

using nlohmann::json;

namespace {

ExtCoord coord_of(const json& j, const std::string& where) {
    if (j.is_number_integer()) return ExtCoord(j.get<std::int64_t>());
    if (!j.is_string()) throw ParseError(where + ": expected a \"p/q\" string");
    try {
        return ExtCoord::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Bound bound_of(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [lo, hi]");
    const ExtCoord lo = coord_of(j[0], where);
    const ExtCoord hi = coord_of(j[1], where);
    if (lo.is_pos_inf() || hi.is_neg_inf()) throw ParseError(where + ": infinite end on the wrong side");
    return {lo, hi};
}

Rational finite_of(const json& j, const std::string& where) {
    const ExtCoord x = coord_of(j, where);
    if (!x.finite()) throw ParseError(where + ": interval endpoints must be finite");
    return x.value();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json bound_json(const Bound& b) { return json::array({b.lo.str(), b.hi.str()}); }

json position_json(const Position& p) { return json{{"anchor", p.anchor}, {"rank", p.rank}}; }

} // namespace

Instance parse_instance(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
        throw ParseError("\"n\" must be a non-negative integer");
    const int n = static_cast<int>(j["n"].get<std::int64_t>());

    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("each edge must be [u, v]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    Instance inst;
    try {
        inst = Instance::unbounded(Graph(n, edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad edge list: ") + e.what());
    }
    if (j.contains("class")) {
        if (!j["class"].is_string()) throw ParseError("\"class\" must be a string");
        try {
            inst.cls = parse_graph_class(j["class"].get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    if (j.contains("bounds")) {
        const json& bs = j["bounds"];
        if (!bs.is_array() || static_cast<int>(bs.size()) != n) throw ParseError("\"bounds\" must list n entries");
        for (int v = 0; v < n; ++v) {
            const std::string where = "bounds[" + std::to_string(v) + "]";
            if (!bs[v].is_object()) throw ParseError(where + " must be an object");
            if (bs[v].contains("L")) inst.bounds[v].left = bound_of(bs[v]["L"], where + ".L");
            if (bs[v].contains("R")) inst.bounds[v].right = bound_of(bs[v]["R"], where + ".R");
        }
    }
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    json edges = json::array();
    for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
    json bounds = json::array();
    for (const auto& b : inst.bounds) bounds.push_back({{"L", bound_json(b.left)}, {"R", bound_json(b.right)}});
    json j = {{"n", inst.n()}, {"class", to_string(inst.cls)}, {"edges", edges}, {"bounds", bounds}};
    return j.dump() + "\n";
}

Representation parse_representation(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("representation must be a JSON object");
    if (j.contains("status") && j["status"] != "sat") throw ParseError("result is not SAT, nothing to read");
    if (!j.contains("intervals") || !j["intervals"].is_array()) throw ParseError("\"intervals\" missing");
    Representation rep;
    for (std::size_t i = 0; i < j["intervals"].size(); ++i) {
        const json& iv = j["intervals"][i];
        const std::string where = "intervals[" + std::to_string(i) + "]";
        if (!iv.is_array() || iv.size() != 2) throw ParseError(where + ": expected [l, r]");
        rep.intervals.push_back({finite_of(iv[0], where), finite_of(iv[1], where)});
    }
    return rep;
}

std::string result_to_json(const SolveResult& result, const std::string& trace_json) {
    json j;
    if (result.sat()) {
        json ivs = json::array();
        for (const auto& iv : result.representation->intervals) ivs.push_back({iv.lo.str(), iv.hi.str()});
        j = {{"status", "sat"}, {"intervals", ivs}};
    } else {
        j = {{"status", "unsat"}, {"reason", to_string(result.unsat->reason)}, {"detail", result.unsat->detail}};
    }
    if (!trace_json.empty()) j["trace"] = json::parse(trace_json);
    return j.dump() + "\n";
}

std::string trace_to_json(const IntervalTrace& trace) {
    json points = json::array();
    for (const auto& p : trace.points) points.push_back(position_json(p));
    json j = {{"cliques", trace.cliques.cliques}, {"pqtree", trace.pqtree}, {"clique_order", trace.order},
              {"clique_points", points}};
    return j.dump();
}

std::string trace_to_json(const ProperTrace& trace) {
    json comps = json::array();
    for (std::size_t c = 0; c < trace.components.size(); ++c) {
        const ReducedComponent& red = trace.reduced[c];
        json order = json::array();
        for (const auto& cls : trace.item_orders[c]) {
            std::vector<Vertex> vs;
            for (int x : cls) vs.insert(vs.end(), red.members[x].begin(), red.members[x].end());
            std::sort(vs.begin(), vs.end());
            order.push_back(vs);
        }
        comps.push_back({{"vertices", trace.components[c]},
                         {"canonical_order", trace.canonical[c].order},
                         {"groups", trace.canonical[c].groups},
                         {"merged", red.members},
                         {"reversed", static_cast<bool>(trace.reversed[c])},
                         {"vertex_order", order}});
    }
    return json{{"components", comps}}.dump();
}

} // namespace boundrep
