#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "revmap/matrix.hpp"
#include "revmap/revcore.hpp"

namespace revmap::cli {

/// On-disk description of an involution pair:
///
///   {"dim": 2, "scalar_context": 5, "phi1": [["-1","0"],["1","1"]],
///    "phi2": [["1","0"],["0","-1"]], "metadata": {...}}
///
/// Entries are scalar strings such as "3", "-1/2" or "1/2+3/4*sqrt(5)".
/// scalar_context is required as soon as an entry carries a square root.
struct PairDocument {
    std::size_t dim = 0;
    std::optional<std::int64_t> scalar_context;
    Matrix phi1;
    Matrix phi2;
    nlohmann::json metadata;

    /// Throws precondition_error when a matrix is not an involution.
    InvolutionPair pair() const;
};

/// Throws parse_error on malformed JSON, wrong shapes or bad scalars.
PairDocument parse_pair_document(const std::string& text);
/// Reads and parses a file; unreadable files raise parse_error.
PairDocument load_pair_document(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace revmap::cli
