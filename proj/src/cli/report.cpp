#include "revmap/cli/report.hpp"

#include <cstdio>

namespace revmap::cli {

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string inputs_digest(const std::vector<std::string>& contents) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const std::string& c : contents) {
        h = fnv1a64(c, h);
        h = fnv1a64(std::string(1, '\0'), h);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const Scalar& x) {
    return x.to_string();
}

json to_json(const Vector& v) {
    json out = json::array();
    for (const Scalar& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (const Vector& v : s.basis()) basis.push_back(to_json(v));
    return {{"dim", s.dim()}, {"basis", basis}};
}

json to_json(const ReversorLabel& label) {
    return label.to_string();
}

json to_json(const InvolutionPair& pair) {
    return {{"phi1", to_json(pair.phi1())}, {"phi2", to_json(pair.phi2())}};
}

json make_report(const std::string& command, const std::vector<std::string>& files,
                 const std::vector<std::string>& contents, json result) {
    return {{"command", command},
            {"inputs", {{"files", files}, {"digest", inputs_digest(contents)}}},
            {"exact", true},
            {"result", std::move(result)}};
}

std::string render_report(const json& report) {
    return report.dump(2) + "\n";
}

}  // namespace revmap::cli
