#include "tbk/report.hpp"

#include <json.hpp>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

using nlohmann::json;

std::vector<std::string> coeff_strings(const IntPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

}  // namespace

ReportDocument to_document(const PRepReport& report, bool with_timings) {
    ReportDocument doc;
    doc.alpha = std::to_string(report.form.alpha());
    doc.beta = std::to_string(report.form.beta());
    doc.lambda = coeff_strings(report.lambda);
    for (std::size_t i = 0; i < report.roots.roots.size(); ++i) {
        const auto& r = report.roots.roots[i];
        doc.roots.push_back({r.real(), r.imag(), report.roots.residuals[i], report.g[i].real(), report.g[i].imag()});
    }
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
        const PRepClass& c = report.classes[k];
        ReportDocument::Class entry;
        entry.factor = coeff_strings(c.factor);
        entry.root_indices = report.class_root_indices[k];
        if (c.g_residue) {
            entry.g_residue = coeff_strings(*c.g_residue);
            if (c.g_residue->degree() <= 0) entry.g_exact = c.g_residue->coeff(0).get_str();
        }
        doc.classes.push_back(std::move(entry));
    }
    if (with_timings) doc.timings_ms = report.timings_ms;
    return doc;
}

std::string emit_report(const ReportDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["form"] = {{"alpha", doc.alpha}, {"beta", doc.beta}};
    j["lambda"] = doc.lambda;
    json roots = json::array();
    for (const auto& r : doc.roots)
        roots.push_back({{"re", r.re}, {"im", r.im}, {"residual", r.residual}, {"g_re", r.g_re}, {"g_im", r.g_im}});
    j["roots"] = std::move(roots);
    json classes = json::array();
    for (const auto& c : doc.classes) {
        json e = {{"factor", c.factor}, {"root_indices", json::array()}, {"g_residue", c.g_residue}};
        for (std::size_t idx : c.root_indices) e["root_indices"].push_back(std::to_string(idx));
        e["g_exact"] = c.g_exact ? json(*c.g_exact) : json(nullptr);
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    if (!doc.timings_ms.empty()) j["timings_ms"] = doc.timings_ms;
    return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
    try {
        const json j = json::parse(text);
        ReportDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != kReportSchemaVersion)
            throw ParseError("unsupported report schema '" + doc.schema_version + "'");
        doc.alpha = j.at("form").at("alpha").get<std::string>();
        doc.beta = j.at("form").at("beta").get<std::string>();
        doc.lambda = j.at("lambda").get<std::vector<std::string>>();
        for (const auto& r : j.at("roots"))
            doc.roots.push_back({r.at("re").get<double>(), r.at("im").get<double>(), r.at("residual").get<double>(),
                                 r.at("g_re").get<double>(), r.at("g_im").get<double>()});
        for (const auto& c : j.at("classes")) {
            ReportDocument::Class entry;
            entry.factor = c.at("factor").get<std::vector<std::string>>();
            for (const auto& idx : c.at("root_indices")) entry.root_indices.push_back(std::stoul(idx.get<std::string>()));
            entry.g_residue = c.at("g_residue").get<std::vector<std::string>>();
            if (!c.at("g_exact").is_null()) entry.g_exact = c.at("g_exact").get<std::string>();
            doc.classes.push_back(std::move(entry));
        }
        if (j.contains("timings_ms")) doc.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace tbk
