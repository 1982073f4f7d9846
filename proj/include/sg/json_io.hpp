#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sg/core.hpp"
#include "sg/hoffman.hpp"
#include "sg/lattice.hpp"
#include "sg/structure.hpp"

namespace sg {

/// Malformed files or JSON shapes; the CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph files: {"vertices": n, "edges": [[u, v, "+"|"-"], ...]}
nlohmann::json graph_to_json(const SignedGraph& g);
SignedGraph graph_from_json(const nlohmann::json& j);

// Hoffman graph files add "labels": ["s"|"f", ...].
nlohmann::json hoffman_to_json(const HoffmanSignedGraph& h);
HoffmanSignedGraph hoffman_from_json(const nlohmann::json& j);
bool looks_like_hoffman(const nlohmann::json& j);

// Certificates: {"s": .., "shift": .., "matrix": [[..], ..]}
nlohmann::json certificate_to_json(const IntegrabilityCertificate& cert);
IntegrabilityCertificate certificate_from_json(const nlohmann::json& j);

// Config: {"kappa": {..}, "ramsey": {"m,s,t": value},
//          "residual_valency_bound": v}
KappaInputs kappa_from_json(const nlohmann::json& j);

nlohmann::json int_matrix_to_json(const IntMatrix& m);

/// Parses a file, wrapping parse errors with path and position context.
nlohmann::json load_json_file(const std::string& path);

/// FNV-1a 64-bit digest of the file bytes, as "fnv1a:<hex>".
std::string file_digest(const std::string& path);

}  // namespace sg
