#include "sg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sg {

using nlohmann::json;

json graph_to_json(const SignedGraph& g) {
    json edges = json::array();
    for (const SignedEdge& e : g.edges())
        edges.push_back({e.u, e.v, std::string(1, sign_char(e.sign))});
    return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

SignedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON needs \"vertices\" and \"edges\" fields");
    if (!j["vertices"].is_number_integer())
        throw InputError("field \"vertices\" must be an integer");
    int n = j["vertices"].get<int>();
    if (!j["edges"].is_array()) throw InputError("field \"edges\" must be an array");
    std::vector<SignedEdge> edges;
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const json& e = j["edges"][i];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_string())
            throw InputError("edge " + std::to_string(i) +
                             " must be [u, v, \"+\"|\"-\"]");
        std::string s = e[2].get<std::string>();
        if (s != "+" && s != "-")
            throw InputError("edge " + std::to_string(i) + " has malformed sign \"" + s + "\"");
        edges.push_back({e[0].get<int>(), e[1].get<int>(),
                         s == "+" ? Sign::plus : Sign::minus});
    }
    try {
        return SignedGraph::build(n, edges);
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

json hoffman_to_json(const HoffmanSignedGraph& h) {
    json out = graph_to_json(h.graph());
    json labels = json::array();
    for (VertexLabel l : h.labels()) labels.push_back(l == VertexLabel::slim ? "s" : "f");
    out["labels"] = std::move(labels);
    return out;
}

HoffmanSignedGraph hoffman_from_json(const json& j) {
    SignedGraph g = graph_from_json(j);
    if (!j.contains("labels") || !j["labels"].is_array())
        throw InputError("Hoffman graph JSON needs a \"labels\" array");
    std::vector<VertexLabel> labels;
    for (const json& l : j["labels"]) {
        if (!l.is_string() || (l.get<std::string>() != "s" && l.get<std::string>() != "f"))
            throw InputError("labels must be \"s\" or \"f\"");
        labels.push_back(l.get<std::string>() == "s" ? VertexLabel::slim : VertexLabel::fat);
    }
    try {
        return HoffmanSignedGraph::build(std::move(g), std::move(labels));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

bool looks_like_hoffman(const json& j) { return j.is_object() && j.contains("labels"); }

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2));
        rows.push_back(std::move(row));
    }
    return rows;
}

json certificate_to_json(const IntegrabilityCertificate& cert) {
    return json{{"s", cert.s}, {"shift", cert.shift},
                {"matrix", int_matrix_to_json(cert.n_matrix)}};
}

IntegrabilityCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("shift") || !j.contains("matrix"))
        throw InputError("certificate JSON needs \"s\", \"shift\" and \"matrix\" fields");
    IntegrabilityCertificate cert;
    cert.s = j["s"].get<long long>();
    cert.shift = j["shift"].get<long long>();
    const json& m = j["matrix"];
    if (!m.is_array() || m.empty()) throw InputError("certificate matrix must be a nonempty array");
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    cert.n_matrix = IntMatrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!m[i].is_array() || static_cast<int>(m[i].size()) != cols)
            throw InputError("certificate matrix rows have inconsistent lengths");
        for (int c = 0; c < cols; ++c) {
            if (!m[i][c].is_number_integer())
                throw InputError("certificate matrix entries must be integers");
            cert.n_matrix.at(i, c) = m[i][c].get<long long>();
        }
    }
    return cert;
}

KappaInputs kappa_from_json(const json& j) {
    KappaInputs k;
    if (j.contains("kappa")) {
        if (!j["kappa"].is_object()) throw InputError("\"kappa\" must be an object");
        for (auto it = j["kappa"].begin(); it != j["kappa"].end(); ++it)
            k.kappa[it.key()] = it.value().get<long long>();
    }
    if (j.contains("ramsey")) {
        if (!j["ramsey"].is_object()) throw InputError("\"ramsey\" must be an object");
        for (auto it = j["ramsey"].begin(); it != j["ramsey"].end(); ++it)
            k.ramsey[it.key()] = it.value().get<long long>();
    }
    if (j.contains("residual_valency_bound"))
        k.residual_valency_bound = j["residual_valency_bound"].get<long long>();
    return k;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

}  // namespace sg
