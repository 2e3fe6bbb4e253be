#include "revmap/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "revmap/classify.hpp"
#include "revmap/cli/pair_document.hpp"
#include "revmap/cli/svg_plot.hpp"
#include "revmap/dynamics.hpp"
#include "revmap/errors.hpp"
#include "revmap/symgroups.hpp"

namespace revmap::cli {

namespace {

struct Loaded {
    std::string path;
    std::string content;
    PairDocument doc;
};

Loaded load(const std::string& path) {
    Loaded out{path, read_file(path), {}};
    try {
        out.doc = parse_pair_document(out.content);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
    return out;
}

CommandOutcome finish(const std::string& command, const Loaded& in, json result, std::vector<std::string> summary,
                      int code = exit_ok) {
    return {make_report(command, {in.path}, {in.content}, std::move(result)), code, std::move(summary)};
}

json space_json(const MatrixSpace& space) {
    json basis = json::array();
    for (const Matrix& m : space.basis()) basis.push_back(to_json(m));
    return {{"dim", space.dim()}, {"basis", basis}};
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

}  // namespace

Vector parse_point(const std::string& text) {
    Vector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_scalar(item));
        } catch (const std::exception& e) {
            throw parse_error("--point: " + std::string(e.what()));
        }
    }
    if (out.empty()) throw parse_error("--point: no coordinates");
    return out;
}

CommandOutcome cmd_check(const std::string& path) {
    const Loaded in = load(path);
    const bool inv1 = is_involution(in.doc.phi1);
    const bool inv2 = is_involution(in.doc.phi2);
    json result = {{"phi1_involution", inv1}, {"phi2_involution", inv2}};
    std::vector<std::string> summary = {"phi1 involution: " + yes_no(inv1), "phi2 involution: " + yes_no(inv2)};
    bool ok = inv1 && inv2;
    if (ok) {
        const InvolutionPair pair = in.doc.pair();
        const Matrix f = compose_f(pair);
        const bool rev1 = is_reversible(f, pair.phi1());
        const bool rev2 = is_reversible(f, pair.phi2());
        result["transversal"] = pair.transversal();
        result["F"] = to_json(f);
        result["reversible_by_phi1"] = rev1;
        result["reversible_by_phi2"] = rev2;
        summary.push_back("transversal: " + yes_no(pair.transversal()));
        summary.push_back("F = " + f.to_string());
        summary.push_back("F reversed by phi1: " + yes_no(rev1) + ", by phi2: " + yes_no(rev2));
        ok = pair.transversal() && rev1 && rev2;
    }
    result["passed"] = ok;
    return finish("check", in, std::move(result), std::move(summary), ok ? exit_ok : exit_check_failed);
}

CommandOutcome cmd_classify(const std::string& path) {
    const Loaded in = load(path);
    const InvolutionPair pair = in.doc.pair();
    const ClassificationResult c = classify(pair);
    const InvolutionPair image = pair.conjugated_by(c.conjugacy);
    const bool verified = image == c.normal_form;
    json result = {{"case", to_string(c.case_tag)},
                   {"trace_t", to_json(c.trace_t)},
                   {"normal_form", to_json(c.normal_form)},
                   {"conjugacy", to_json(c.conjugacy)},
                   {"witness_verified", verified}};
    std::vector<std::string> summary = {"case: " + to_string(c.case_tag), "trace t = " + c.trace_t.to_string(),
                                        "conjugacy h = " + c.conjugacy.to_string(),
                                        "h psi_i h^-1 = normal form: " + yes_no(verified)};
    if (c.suspension_split) {
        result["suspension_split"] = {{"core_dim", c.suspension_split->core_dim},
                                      {"trivial_dim", c.suspension_split->trivial_dim},
                                      {"core_trace", to_json(c.trace_t - Scalar(static_cast<long>(c.suspension_split->trivial_dim)))}};
        summary.push_back("suspension: core " + std::to_string(c.suspension_split->core_dim) + " + trivial " +
                          std::to_string(c.suspension_split->trivial_dim));
    }
    if (c.eigen) {
        json eigen = {{"theta_cos", to_json(c.eigen->theta_cos)}};
        if (c.eigen->beta_basis) {
            eigen["beta_basis"] = {to_json((*c.eigen->beta_basis)[0]), to_json((*c.eigen->beta_basis)[1])};
        }
        if (c.eigen->lambda_plus) eigen["lambda_plus"] = to_json(*c.eigen->lambda_plus);
        if (c.eigen->lambda_minus) eigen["lambda_minus"] = to_json(*c.eigen->lambda_minus);
        result["eigen"] = std::move(eigen);
    }
    return finish("classify", in, std::move(result), std::move(summary), verified ? exit_ok : exit_check_failed);
}

CommandOutcome cmd_chains(const std::string& path, const CommandOptions& opts) {
    const Loaded in = load(path);
    const ChainReport r = verify_chain(in.doc.pair(), opts.k_max);
    auto links_json = [](const std::vector<ChainLink>& links) {
        json out = json::array();
        for (const ChainLink& l : links) {
            out.push_back({{"source", to_json(l.source)},
                           {"target", to_json(l.target)},
                           {"relation", l.relation},
                           {"holds", l.holds}});
        }
        return out;
    };
    json coincidences = json::array();
    for (const auto& [a, b] : r.coincidences) coincidences.push_back({to_json(a), to_json(b)});
    json result = {{"k_max", r.k_max},
                   {"links", links_json(r.links)},
                   {"counterexamples", links_json(r.counterexamples)},
                   {"all_links_hold", r.all_links_hold()},
                   {"distinct_fix_count_even", r.distinct_fix_count_even},
                   {"distinct_fix_count_odd", r.distinct_fix_count_odd},
                   {"finite_chain", r.finite_chain},
                   {"coincidences", coincidences},
                   {"fix_dims_unprimed", r.fix_dims_unprimed},
                   {"fix_dims_primed", r.fix_dims_primed}};
    std::vector<std::string> summary = {
        "links checked: " + std::to_string(r.links.size()) + ", failing: " + std::to_string(r.counterexamples.size()),
        "distinct Fix subspaces: even " + std::to_string(r.distinct_fix_count_even) + ", odd " +
            std::to_string(r.distinct_fix_count_odd),
        "finite chain: " + yes_no(r.finite_chain)};
    return finish("chains", in, std::move(result), std::move(summary),
                  r.all_links_hold() ? exit_ok : exit_check_failed);
}

CommandOutcome cmd_periodic(const std::string& path, const CommandOptions& opts) {
    const Loaded in = load(path);
    const PeriodicityReport r = periodic_certificates(in.doc.pair(), opts.k_max);
    json certs = json::array();
    for (const PeriodCertificate& c : r.certificates) {
        certs.push_back({{"point", to_json(c.point)},
                         {"k", c.k},
                         {"l", c.l},
                         {"flavor", to_string(c.flavor)},
                         {"period_divisor", c.period_divisor}});
    }
    json result = {{"k_max", opts.k_max},
                   {"certificates", certs},
                   {"trivial_intersections", r.trivial_intersections},
                   {"converse_checks", r.converse_checks}};
    std::vector<std::string> summary = {"certificates: " + std::to_string(r.certificates.size()),
                                        "trivial intersections: " + std::to_string(r.trivial_intersections),
                                        "converse checks passed: " + std::to_string(r.converse_checks)};
    return finish("periodic", in, std::move(result), std::move(summary));
}

CommandOutcome cmd_symmetries(const std::string& path) {
    const Loaded in = load(path);
    const InvolutionPair pair = in.doc.pair();
    const Matrix f = compose_f(pair);
    const MatrixSpace sym = symmetry_space(f);
    const MatrixSpace rev = reversing_space(f);
    const bool coset = coset_check(f, pair.phi1());
    json result = {{"F", to_json(f)},
                   {"symmetry_space", space_json(sym)},
                   {"reversing_space", space_json(rev)},
                   {"phi1_membership", to_string(membership(pair.phi1(), f))},
                   {"phi2_membership", to_string(membership(pair.phi2(), f))},
                   {"coset_check_phi1", coset}};
    std::vector<std::string> summary = {"dim symmetry space: " + std::to_string(sym.dim()),
                                        "dim reversing space: " + std::to_string(rev.dim()),
                                        "reversing space = phi1 * symmetry space: " + yes_no(coset)};
    return finish("symmetries", in, std::move(result), std::move(summary), coset ? exit_ok : exit_check_failed);
}

CommandOutcome cmd_conjugate(const std::string& path_a, const std::string& path_b) {
    const Loaded a = load(path_a);
    const Loaded b = load(path_b);
    const ConjugacySolution sol = solve_conjugacy(a.doc.pair(), b.doc.pair());
    json result = {{"found", sol.h.has_value()},
                   {"solution_space_dim", sol.solution_space_dim},
                   {"search_exhausted", sol.search_exhausted}};
    std::vector<std::string> summary = {"solution space dim: " + std::to_string(sol.solution_space_dim)};
    if (sol.h) {
        result["h"] = to_json(*sol.h);
        summary.push_back("h = " + sol.h->to_string());
    } else {
        summary.push_back(sol.search_exhausted ? "no invertible element found by the search (not a proof)"
                                               : "pairs are not equivalent");
    }
    return {make_report("conjugate", {a.path, b.path}, {a.content, b.content}, std::move(result)),
            sol.h ? exit_ok : exit_check_failed, std::move(summary)};
}

CommandOutcome cmd_orbit(const std::string& path, const CommandOptions& opts) {
    const Loaded in = load(path);
    if (!opts.point) throw parse_error("orbit: --point is required");
    const InvolutionPair pair = in.doc.pair();
    const Vector x = parse_point(*opts.point);
    if (x.size() != pair.dim()) throw dimension_error("orbit: --point has the wrong number of coordinates");
    const Matrix f = compose_f(pair);
    json points = json::array();
    std::vector<std::string> summary;
    long j = 0;
    for (const Vector& p : orbit(f, x, opts.steps)) {
        points.push_back(to_json(p));
        summary.push_back("F^" + std::to_string(opts.steps < 0 ? -j : j) + " x = " + to_string(p));
        ++j;
    }
    json result = {{"F", to_json(f)}, {"start", to_json(x)}, {"steps", opts.steps}, {"points", points}};
    if (opts.steps >= 0) result["reversed_by_phi1"] = reversed_orbit_check(f, pair.phi1(), x, opts.steps);
    return finish("orbit", in, std::move(result), std::move(summary));
}

CommandOutcome cmd_plot(const std::string& path, const CommandOptions& opts) {
    const Loaded in = load(path);
    if (!opts.out) throw parse_error("plot: --out is required");
    const InvolutionPair pair = in.doc.pair();
    if (pair.dim() > 3) throw dimension_error("plot: supports dimension 2 and 3 only");
    PlotOptions po;
    po.k_max = opts.k_max;
    if (opts.point) po.orbit_start = parse_point(*opts.point);
    po.orbit_steps = opts.steps;
    const Plot plot = render_plot(pair, po);
    {
        std::ofstream file(*opts.out, std::ios::binary);
        if (!file) throw parse_error("plot: cannot write " + *opts.out);
        file << plot.svg;
        if (!file) throw parse_error("plot: write to " + *opts.out + " failed");
    }
    auto lines_json = [](const std::vector<PlottedLine>& lines) {
        json out = json::array();
        for (const PlottedLine& l : lines) out.push_back({{"direction", to_json(l.direction)}, {"labels", l.labels}});
        return out;
    };
    json result = {{"out", *opts.out},
                   {"k_max", opts.k_max},
                   {"fixed_lines", lines_json(plot.fixed_lines)},
                   {"dashed_lines", lines_json(plot.dashed_lines)},
                   {"orbit_points", plot.orbit_points},
                   {"svg_digest", inputs_digest({plot.svg})}};
    std::vector<std::string> summary = {"wrote " + *opts.out,
                                        "fixed-line directions: " + std::to_string(plot.fixed_lines.size()),
                                        "dashed lines: " + std::to_string(plot.dashed_lines.size())};
    return finish("plot", in, std::move(result), std::move(summary));
}

int run_command(const std::string& command, const std::vector<std::string>& files, const CommandOptions& opts,
                bool pretty, std::ostream& out, std::ostream& err) {
    try {
        const std::size_t wanted = command == "conjugate" ? 2 : 1;
        if (files.size() != wanted) {
            throw parse_error(command + ": expects " + std::to_string(wanted) + " pair file(s)");
        }
        CommandOutcome outcome;
        if (command == "check") outcome = cmd_check(files[0]);
        else if (command == "classify") outcome = cmd_classify(files[0]);
        else if (command == "chains") outcome = cmd_chains(files[0], opts);
        else if (command == "periodic") outcome = cmd_periodic(files[0], opts);
        else if (command == "symmetries") outcome = cmd_symmetries(files[0]);
        else if (command == "conjugate") outcome = cmd_conjugate(files[0], files[1]);
        else if (command == "orbit") outcome = cmd_orbit(files[0], opts);
        else if (command == "plot") outcome = cmd_plot(files[0], opts);
        else throw parse_error("unknown command " + command);

        if (pretty) {
            out << command << ":\n";
            for (const std::string& line : outcome.summary) out << "  " << line << "\n";
        } else {
            out << render_report(outcome.report);
        }
        return outcome.exit_code;
    } catch (const parse_error& e) {
        err << "revmap: input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const dimension_error& e) {
        err << "revmap: input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const context_error& e) {
        err << "revmap: input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const precondition_error& e) {
        err << "revmap: check failed: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const singular_matrix_error& e) {
        err << "revmap: check failed: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const std::logic_error& e) {
        err << "revmap: check failed: " << e.what() << "\n";
        return exit_check_failed;
    }
}

}  // namespace revmap::cli
