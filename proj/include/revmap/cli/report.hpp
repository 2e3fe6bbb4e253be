#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revmap/matrix.hpp"
#include "revmap/revcore.hpp"
#include "revmap/subspace.hpp"

namespace revmap::cli {

using json = nlohmann::json;

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
/// Hex digest over the contents of several inputs, in order.
std::string inputs_digest(const std::vector<std::string>& contents);

json to_json(const Scalar& x);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const ReversorLabel& label);
json to_json(const InvolutionPair& pair);

/// {"command", "inputs": {"files", "digest"}, "exact": true, "result"}.
json make_report(const std::string& command, const std::vector<std::string>& files,
                 const std::vector<std::string>& contents, json result);

/// Serialized report; keys are sorted, so output is byte-stable.
std::string render_report(const json& report);

}  // namespace revmap::cli
