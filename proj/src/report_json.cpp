#include "trispec/report_json.hpp"

#include <sstream>

namespace trispec {

nlohmann::json family_json(const TriangleFamily& family) {
    auto out = nlohmann::json::array();
    for (const auto& t : family) out.push_back({t[0], t[1], t[2]});
    return out;
}

nlohmann::json to_json(const SpectralReport& r) {
    nlohmann::json j;
    j["lambda"] = r.lambda;
    j["tau"] = r.tau ? nlohmann::json(*r.tau) : nlohmann::json(nullptr);
    j["nullity"] = r.nullity;
    j["spectrum"] = r.full_spectrum.eigenvalues;
    j["spectrum_source"] = std::string(to_string(r.spectrum_source));
    j["lambda_min_plus_L0"] = r.lambda_min_plus_L0;
    j["lambda_min_plus_L1_total"] = r.lambda_min_plus_L1_total;
    j["dims"] = {{"vertices", r.vertex_count}, {"edges", r.edge_count}, {"triangles", r.triangle_count}};
    return j;
}

nlohmann::json to_json(const OverlapCertificate& c) {
    return {{"lambda", c.lambda},
            {"n", c.n},
            {"min_edge_codegree", c.min_edge_codegree},
            {"min_common_neighbors", c.min_common_neighbors},
            {"min_degree", c.min_degree},
            {"min_vertex_triangles", c.min_vertex_triangles},
            {"vertex_count", c.vertex_count},
            {"lambda_near_integer", c.lambda_near_integer},
            {"pass", c.pass}};
}

nlohmann::json to_json(const CountingCertificate& c) {
    nlohmann::json j = {{"v", c.v},           {"e", c.e},
                        {"t", c.t},           {"lambda", c.lambda},
                        {"ceil_lambda", c.n}, {"applicable", c.applicable},
                        {"lambda_near_integer", c.lambda_near_integer}, {"pass", c.pass}};
    if (c.applicable) {
        j["bounds"] = {
            {"v_le_2e_over_n_minus_1", {{"rhs", c.vertex_bound_by_edges}, {"holds", c.vertex_by_edges_holds}}},
            {"e_le_3t_over_n_minus_2", {{"rhs", c.edge_bound}, {"holds", c.edges_hold}}},
            {"v_le_6t_over_n_minus_1_n_minus_2",
             {{"rhs", c.vertex_bound_by_triangles}, {"holds", c.vertex_by_triangles_holds}}},
        };
    }
    return j;
}

nlohmann::json to_json(const RigidityVerdict& v) {
    return {{"n", v.n}, {"branch", to_string(v.branch)}, {"lambda", v.lambda}, {"pass", v.pass}, {"detail", v.detail}};
}

nlohmann::json to_json(const MinGapCheck& c) {
    return {{"pass", c.pass},         {"lambda_min_plus_L1_total", c.total_gap},
            {"lambda_min_plus_L0", c.graph_gap}, {"lambda", c.lambda},
            {"residual", c.residual}, {"tolerance", c.tolerance}};
}

nlohmann::json to_json(const PhiEntry& e) {
    return {{"t", e.t},
            {"phi", e.phi},
            {"exhaustive", e.exhaustive},
            {"partition", e.partition},
            {"connected_classes", e.connected_classes},
            {"pruned_parents", e.pruned_parents},
            {"witness", family_json(e.witness)}};
}

nlohmann::json to_json(const PhiTable& table) {
    const auto running = table.running_max();
    auto rows = nlohmann::json::array();
    for (const auto& [t, e] : table.entries) {
        auto j = to_json(e);
        j["Lambda"] = running.at(t);
        rows.push_back(std::move(j));
    }
    return {{"entries", rows}};
}

std::string to_csv(const PhiTable& table) {
    const auto running = table.running_max();
    std::ostringstream out;
    out.precision(17);
    out << "t,phi,Lambda,exhaustive,connected_classes,partition,witness\n";
    for (const auto& [t, e] : table.entries) {
        std::string parts;
        for (int p : e.partition) parts += (parts.empty() ? "" : "+") + std::to_string(p);
        out << t << ',' << e.phi << ',' << running.at(t) << ',' << (e.exhaustive ? "true" : "false") << ','
            << e.connected_classes << ',' << parts << ",\"" << family_key(e.witness) << "\"\n";
    }
    return out.str();
}

}  // namespace trispec
