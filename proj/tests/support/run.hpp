// Helpers for driving the revmap binary and checking its SVG output.
#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>
#include <vector>

namespace run {

struct Result {
    int exit_code = -1;
    std::string out;
};

// Runs the revmap binary with the given argument string; stderr is discarded.
inline Result revmap(const std::string& args) {
    const std::string cmd = std::string("\"") + REVMAP_BINARY + "\" " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Minimal well-formedness check: every element opened is closed in order,
// attributes are quoted, and there is exactly one root <svg> element.
inline bool well_formed_svg(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t roots = 0;
    std::size_t pos = 0;
    static const std::regex open_tag(R"(^<([A-Za-z][\w:-]*)((\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
    static const std::regex close_tag(R"(^</([A-Za-z][\w:-]*)\s*>)");
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const std::string rest = text.substr(pos, 2048);
        std::smatch m;
        if (rest.rfind("<?", 0) == 0) {
            pos = text.find("?>", pos);
            if (pos == std::string::npos) return false;
            continue;
        }
        if (std::regex_search(rest, m, close_tag)) {
            if (stack.empty() || stack.back() != m[1]) return false;
            stack.pop_back();
        } else if (std::regex_search(rest, m, open_tag)) {
            if (stack.empty()) ++roots;
            if (stack.empty() && m[1] != "svg") return false;
            if (m[4] != "/") stack.push_back(m[1]);
        } else {
            return false;
        }
        pos += static_cast<std::size_t>(m.length(0));
    }
    return stack.empty() && roots == 1;
}

inline std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace run
