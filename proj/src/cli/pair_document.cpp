#include "revmap/cli/pair_document.hpp"

#include <fstream>
#include <sstream>

#include "revmap/errors.hpp"

namespace revmap::cli {

namespace {

Matrix parse_matrix(const nlohmann::json& node, const char* name, std::size_t dim, std::optional<std::int64_t> context) {
    if (!node.is_array() || node.size() != dim) {
        throw parse_error(std::string(name) + ": expected " + std::to_string(dim) + " rows");
    }
    Matrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = node[r];
        if (!row.is_array() || row.size() != dim) {
            throw parse_error(std::string(name) + ": row " + std::to_string(r) + " must have " + std::to_string(dim) +
                              " entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& cell = row[c];
            std::string text;
            if (cell.is_string()) {
                text = cell.get<std::string>();
            } else if (cell.is_number_integer()) {
                text = cell.dump();
            } else {
                throw parse_error(std::string(name) + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                  "]: entries must be strings or integers");
            }
            try {
                out(r, c) = parse_scalar(text, context);
            } catch (const std::exception& e) {
                throw parse_error(std::string(name) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: " +
                                  e.what());
            }
            if (!context && !out(r, c).is_rational()) {
                throw parse_error(std::string(name) + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                  "]: square roots need \"scalar_context\"");
            }
        }
    }
    return out;
}

}  // namespace

InvolutionPair PairDocument::pair() const {
    return InvolutionPair(phi1, phi2);
}

PairDocument parse_pair_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("pair document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("pair document must be a JSON object");
    for (const char* key : {"dim", "phi1", "phi2"}) {
        if (!doc.contains(key)) throw parse_error(std::string("pair document lacks \"") + key + "\"");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
        throw parse_error("\"dim\" must be a positive integer");
    }
    PairDocument out;
    out.dim = doc["dim"].get<std::size_t>();
    if (doc.contains("scalar_context") && !doc["scalar_context"].is_null()) {
        const auto& ctx = doc["scalar_context"];
        if (!ctx.is_number_integer() || !is_square_free(ctx.get<std::int64_t>())) {
            throw parse_error("\"scalar_context\" must be a square-free integer >= 2");
        }
        out.scalar_context = ctx.get<std::int64_t>();
    }
    out.phi1 = parse_matrix(doc["phi1"], "phi1", out.dim, out.scalar_context);
    out.phi2 = parse_matrix(doc["phi2"], "phi2", out.dim, out.scalar_context);
    out.metadata = doc.value("metadata", nlohmann::json::object());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PairDocument load_pair_document(const std::string& path) {
    try {
        return parse_pair_document(read_file(path));
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

}  // namespace revmap::cli
