#pragma once

#include <string>

#include <json.hpp>

#include "casilab/algebra.hpp"
#include "casilab/builtins.hpp"
#include "casilab/contraction.hpp"
#include "casilab/enveloping.hpp"
#include "casilab/invariants.hpp"
#include "casilab/mlp.hpp"

namespace casilab::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const json& j);

json chain_to_json(const ChainSpec& chain);
ChainSpec chain_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json ue_to_json(const UEElement& e);
UEElement ue_from_json(const json& j);

json template_to_json(const MatrixTemplate& t);
MatrixTemplate template_from_json(const json& j);

json jacobi_report_to_json(const JacobiReport& r);
json chain_report_to_json(const ChainReport& r);
json counts_to_json(const MLPCounts& c);
json decomposition_to_json(const Decomposition& d, const LieAlgebra& chain_alg,
                           const std::string& source_id);
json certificate_to_json(const JacobianCertificate& c);
json mlp_report_to_json(const MLPReport& r);

/// Reads and parses a JSON file; parse failures raise parse_error with the
/// path and byte offset.
json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, hex-encoded; used to stamp reports with
/// their inputs.
std::string fnv1a_digest(const std::string& content);

}  // namespace casilab::io
