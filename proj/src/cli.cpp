#include "tbk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbk/errors.hpp"
#include "tbk/ford.hpp"
#include "tbk/prep.hpp"
#include "tbk/relations.hpp"
#include "tbk/report.hpp"
#include "tbk/svg.hpp"

namespace tbk::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kFormCommands = {"word", "prep", "roots", "factors", "longitude", "ford", "shimizu", "report"};

std::string fmt_complex(std::complex<double> z, int digits = 10) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ")
       << std::fabs(z.imag()) << "i";
    return os.str();
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json form_json(const TwoBridgeForm& f) {
    return {{"alpha", std::to_string(f.alpha())}, {"beta", std::to_string(f.beta())}};
}

json coeffs_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

std::complex<double> select_root(const RootSet& rs, int index) {
    if (index < 1 || static_cast<std::size_t>(index) > rs.roots.size())
        throw UsageError("--root must be between 1 and " + std::to_string(rs.roots.size()));
    return rs.roots[static_cast<std::size_t>(index - 1)];
}

CommandResult cmd_word(const CommandRequest& req, const TwoBridgeForm& f) {
    const auto eps = exponent_sequence(f);
    const FreeWord w = relator_word(f);
    const LongitudeWord lw = longitude_word(f);
    std::ostringstream os;
    if (req.json) {
        json e = json::array();
        for (int x : eps) e.push_back(std::to_string(x));
        json j = {{"form", form_json(f)}, {"exponents", e}, {"relator", w.to_string()},
                  {"longitude", lw.word.to_string()}, {"sigma", std::to_string(lw.sigma)},
                  {"ew", std::to_string(lw.ew)}};
        os << j.dump(2) << '\n';
    } else {
        os << "exponents:";
        for (int x : eps) os << ' ' << (x > 0 ? '+' : '-');
        os << "\nrelator w: " << w.to_string() << "\nlongitude: " << lw.word.to_string() << "\ne(w): " << lw.ew
           << "\nsigma: " << lw.sigma << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_prep(const CommandRequest& req, const TwoBridgeForm& f) {
    const PRepPolynomial p = prep_polynomial(f);
    const bool squarefree = poly_gcd(p.lambda, p.lambda.derivative()).degree() == 0;
    std::ostringstream os;
    if (req.json) {
        json j = {{"form", form_json(f)}, {"lambda", coeffs_json(p.lambda)},
                  {"degree", std::to_string(p.lambda.degree())}, {"squarefree", squarefree}};
        os << j.dump(2) << '\n';
    } else {
        os << "Lambda(u) = " << p.lambda.to_string() << "\ncoefficients: " << p.lambda.to_text()
           << "\ndegree: " << p.lambda.degree() << "\nsquarefree: " << (squarefree ? "yes" : "no") << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_roots(const CommandRequest& req, const TwoBridgeForm& f) {
    const RootSet rs = find_roots(prep_polynomial(f).lambda);
    std::ostringstream os;
    if (req.json) {
        json arr = json::array();
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            arr.push_back({{"index", std::to_string(i + 1)}, {"re", rs.roots[i].real()}, {"im", rs.roots[i].imag()},
                           {"residual", rs.residuals[i]}});
        os << json{{"form", form_json(f)}, {"roots", arr}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            os << std::setw(3) << i + 1 << "  " << fmt_complex(rs.roots[i]) << "   |Lambda| = " << std::scientific
               << std::setprecision(2) << rs.residuals[i] << std::defaultfloat << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_factors(const CommandRequest& req, const TwoBridgeForm& f) {
    const std::vector<PRepClass> classes = detect_factors(prep_polynomial(f));
    std::ostringstream os;
    if (req.json) {
        json arr = json::array();
        for (const auto& c : classes) {
            json roots = json::array(), gs = json::array();
            for (std::size_t i = 0; i < c.roots.size(); ++i) {
                roots.push_back(complex_json(c.roots[i]));
                gs.push_back(complex_json(c.longitude_entries[i]));
            }
            json e = {{"factor", coeffs_json(c.factor)}, {"roots", roots}, {"g", gs},
                      {"g_residue", c.g_residue ? coeffs_json(*c.g_residue) : json(nullptr)}};
            e["g_exact"] = c.g_residue && c.g_residue->degree() <= 0 ? json(c.g_residue->coeff(0).get_str()) : json(nullptr);
            arr.push_back(std::move(e));
        }
        os << json{{"form", form_json(f)}, {"classes", arr}}.dump(2) << '\n';
    } else {
        for (const auto& c : classes) {
            os << "factor " << c.factor.to_text() << "  (" << c.factor.to_string() << ")\n";
            if (c.g_residue && c.g_residue->degree() <= 0)
                os << "  g = " << c.g_residue->coeff(0).get_str() << " (exact)\n";
            else if (c.g_residue)
                os << "  g = " << c.g_residue->to_string() << " mod factor\n";
            for (std::size_t i = 0; i < c.roots.size(); ++i)
                os << "  omega = " << fmt_complex(c.roots[i], 5) << "   g = " << fmt_complex(c.longitude_entries[i], 6)
                   << '\n';
        }
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_longitude(const CommandRequest& req, const TwoBridgeForm& f) {
    const RootSet rs = find_roots(prep_polynomial(f).lambda);
    const std::complex<double> omega = select_root(rs, req.root);
    const std::complex<double> g = longitude_entry(f, omega);
    std::ostringstream os;
    if (req.json) {
        os << json{{"form", form_json(f)}, {"root_index", std::to_string(req.root)}, {"omega", complex_json(omega)},
                   {"g", complex_json(g)}, {"g_abs", std::abs(g)}}
                  .dump(2)
           << '\n';
    } else {
        os << "omega = " << fmt_complex(omega) << "\ng = " << fmt_complex(g) << "\n|g| = " << std::setprecision(12)
           << std::abs(g) << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_ford(const CommandRequest& req, const TwoBridgeForm& f) {
    const RootSet rs = find_roots(prep_polynomial(f).lambda);
    const std::complex<double> omega = select_root(rs, req.root);
    const CuspLattice lattice = cusp_lattice(longitude_entry(f, omega));
    const std::vector<IsometricSphere> spheres = enumerate_spheres(f, omega, req.depth);
    const FordPattern pattern = ford_pattern(spheres, lattice, req.samples);
    if (req.svg_path) {
        std::ofstream out(*req.svg_path, std::ios::binary);
        if (!out) throw PreconditionViolation("cannot write " + *req.svg_path);
        out << render_svg(pattern, lattice);
    }
    std::ostringstream os;
    if (req.json) {
        json arr = json::array();
        for (std::size_t i = 0; i < pattern.spheres.size(); ++i) {
            const auto& s = pattern.spheres[i];
            json arcs = json::array();
            for (const auto& a : pattern.visible_arcs[i]) arcs.push_back({a.start, a.end});
            json aliases = json::array();
            for (const auto& al : s.aliases) aliases.push_back(al.to_string());
            arr.push_back({{"label", s.label.to_string()}, {"aliases", aliases}, {"center", complex_json(s.center)},
                           {"radius", s.radius}, {"visible_arcs", arcs}});
        }
        os << json{{"form", form_json(f)}, {"omega", complex_json(omega)},
                   {"lattice", {{"t1", complex_json(lattice.t1)}, {"t2", complex_json(lattice.t2)},
                                {"degenerate", lattice.degenerate}}},
                   {"coverage", pattern.coverage}, {"spheres", arr}}
                  .dump(2)
           << '\n';
    } else {
        os << "omega = " << fmt_complex(omega) << "\nlattice: 1, " << fmt_complex(lattice.t2)
           << (lattice.degenerate ? "  (degenerate: strip mod z -> z+1)" : "") << "\nspheres: " << pattern.spheres.size()
           << "\ncoverage: " << std::setprecision(6) << pattern.coverage << '\n';
        for (std::size_t i = 0; i < pattern.spheres.size(); ++i) {
            const auto& s = pattern.spheres[i];
            double vis = 0.0;
            for (const auto& a : pattern.visible_arcs[i]) vis += a.measure();
            os << "  " << std::left << std::setw(14) << s.label.to_string() << std::right << " center "
               << fmt_complex(s.center, 5) << "  radius " << std::fixed << std::setprecision(5) << s.radius
               << "  visible " << std::setprecision(4) << vis << std::defaultfloat << '\n';
        }
        if (req.svg_path) os << "svg written to " << *req.svg_path << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_shimizu(const CommandRequest& req, const TwoBridgeForm& f) {
    const RootSet rs = find_roots(prep_polynomial(f).lambda);
    const std::complex<double> omega = select_root(rs, req.root);
    const auto witness = shimizu_scan(ComplexMatrix2::meridian_a(), ComplexMatrix2::meridian_b(omega), req.max_len);
    std::ostringstream os;
    if (req.json) {
        json j = {{"form", form_json(f)}, {"omega", complex_json(omega)}, {"max_len", std::to_string(req.max_len)}};
        j["witness"] = witness ? json{{"word", witness->word.to_string()}, {"c_abs", witness->c_abs}} : json(nullptr);
        os << j.dump(2) << '\n';
    } else if (witness) {
        os << "witness " << witness->word.to_string() << "  |c| = " << std::setprecision(12) << witness->c_abs
           << "  (not discrete)\n";
    } else {
        os << "no witness up to length " << req.max_len << '\n';
    }
    return {kOk, os.str(), {}};
}

CommandResult cmd_verify(const CommandRequest& req) {
    IntPolynomial factor = knot_8_11_factor();
    if (req.factor_file) {
        std::ifstream in(*req.factor_file);
        if (!in) throw PreconditionViolation("cannot read " + *req.factor_file);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        text.erase(std::remove(text.begin(), text.end(), '\n'), text.end());
        factor = IntPolynomial::parse(text);
    } else if (req.factor) {
        factor = IntPolynomial::parse(*req.factor);
    }
    const auto checks = verify_relations(build_relation_fixture(factor));
    const bool all = std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
    std::ostringstream os;
    if (req.json) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"relation", c.name}, {"holds", c.holds}});
        os << json{{"factor", coeffs_json(factor)}, {"relations", arr}, {"all_hold", all}}.dump(2) << '\n';
    } else {
        os << "modulo " << factor.to_string() << '\n';
        for (const auto& c : checks) os << (c.holds ? "  ok    " : "  FAIL  ") << c.name << '\n';
    }
    return {all ? kOk : kVerificationFailed, os.str(), {}};
}

CommandResult cmd_report(const CommandRequest& req, const TwoBridgeForm& f) {
    return {kOk, emit_report(to_document(prep_report(f), req.timings)), {}};
}

std::string error_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}}.dump() + "\n";
}

}  // namespace

CommandRequest parse_command(const std::vector<std::string>& args) {
    CommandRequest req;
    CLI::App app{"Parabolic representations of two-bridge knot groups", "tbk"};
    app.require_subcommand(1);

    struct Spec {
        const char* name;
        const char* description;
    };
    const Spec specs[] = {
        {"word", "exponent sequence, relator word and longitude word"},
        {"prep", "the p-rep polynomial Lambda(u)"},
        {"roots", "complex roots of Lambda"},
        {"factors", "integer factors of Lambda found from (root, longitude entry) pairs"},
        {"longitude", "longitude entry g at one root"},
        {"ford", "isometric circle pattern of theta(omega), optionally as SVG"},
        {"shimizu", "search short words for a non-discreteness witness"},
        {"report", "full JSON report"},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.description);
        sub->add_option("alpha", req.alpha, "odd integer > 1")->required();
        sub->add_option("beta", req.beta, "odd integer coprime to alpha, |beta| < alpha")->required();
        const std::string name = s.name;
        if (name != "report") sub->add_flag("--json", req.json, "machine-readable output");
        if (name == "report") sub->add_flag("--timings", req.timings, "include per-stage timings");
        if (name == "longitude" || name == "ford" || name == "shimizu")
            sub->add_option("--root", req.root, "1-based index into the sorted roots of Lambda");
        if (name == "ford") {
            sub->add_option("--depth", req.depth, "maximal subword length");
            sub->add_option("--samples", req.samples, "angular samples per circle (>= 256)");
            sub->add_option("--svg", req.svg_path, "write the pattern as SVG");
        }
        if (name == "shimizu") sub->add_option("--max-len", req.max_len, "maximal word length (<= 16)");
    }
    CLI::App* verify = app.add_subcommand("verify-8-11", "check the side-pairing relations of the 8_11 cubic class");
    verify->add_flag("--json", req.json, "machine-readable output");
    verify->add_option("--factor", req.factor, "modulus as ascending coefficients, e.g. -1,1,2,1");
    verify->add_option("--factor-file", req.factor_file, "file holding the modulus in the same format");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        req.help = app.help();
        return req;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    const auto chosen = app.get_subcommands();
    if (!chosen.empty() && chosen.front()->get_help_ptr() && chosen.front()->get_help_ptr()->count() > 0) {
        req.help = chosen.front()->help();
        return req;
    }
    req.subcommand = chosen.front()->get_name();

    if (std::find(kFormCommands.begin(), kFormCommands.end(), req.subcommand) != kFormCommands.end()) {
        try {
            validate_form(req.alpha, req.beta);
        } catch (const InvalidForm& e) {
            throw UsageError(std::string("invalid form: ") + e.what());
        }
    }
    if (req.depth < 1) throw UsageError("--depth must be >= 1");
    if (req.samples < 256) throw UsageError("--samples must be >= 256");
    if (req.max_len < 0 || req.max_len > 16) throw UsageError("--max-len must be between 0 and 16");
    if (req.factor && req.factor_file) throw UsageError("--factor and --factor-file are exclusive");
    return req;
}

CommandResult run_command(const CommandRequest& req) {
    if (req.help) return {kOk, *req.help, {}};
    try {
        if (req.subcommand == "verify-8-11") return cmd_verify(req);
        const TwoBridgeForm f = validate_form(req.alpha, req.beta);
        if (req.subcommand == "word") return cmd_word(req, f);
        if (req.subcommand == "prep") return cmd_prep(req, f);
        if (req.subcommand == "roots") return cmd_roots(req, f);
        if (req.subcommand == "factors") return cmd_factors(req, f);
        if (req.subcommand == "longitude") return cmd_longitude(req, f);
        if (req.subcommand == "ford") return cmd_ford(req, f);
        if (req.subcommand == "shimizu") return cmd_shimizu(req, f);
        if (req.subcommand == "report") return cmd_report(req, f);
        throw UsageError("unknown subcommand '" + req.subcommand + "'");
    } catch (const UsageError& e) {
        return {kUsage, {}, error_json(e.kind(), e.what())};
    } catch (const Error& e) {
        return {kOperationalError, {}, error_json(e.kind(), e.what())};
    } catch (const std::exception& e) {
        return {kOperationalError, {}, error_json("InternalError", e.what())};
    }
}

CommandResult run(const std::vector<std::string>& args) {
    try {
        return run_command(parse_command(args));
    } catch (const UsageError& e) {
        return {kUsage, {}, error_json(e.kind(), e.what())};
    }
}

}  // namespace tbk::cli
