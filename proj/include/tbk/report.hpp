#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbk/prep.hpp"

namespace tbk {

inline constexpr std::string_view kReportSchemaVersion = "tbk.report/1";

/// Serializable view of a PRepReport. Exact integers are kept as decimal
/// strings so nothing is lost to 53-bit doubles.
struct ReportDocument {
    struct Root {
        double re = 0.0;
        double im = 0.0;
        double residual = 0.0;
        double g_re = 0.0;
        double g_im = 0.0;
        friend bool operator==(const Root&, const Root&) = default;
    };
    struct Class {
        std::vector<std::string> factor;        ///< ascending coefficients
        std::vector<std::size_t> root_indices;  ///< into roots, 0-based
        std::vector<std::string> g_residue;     ///< g mod factor, ascending coefficients
        std::optional<std::string> g_exact;     ///< set when the residue is constant
        friend bool operator==(const Class&, const Class&) = default;
    };

    std::string schema_version{kReportSchemaVersion};
    std::string alpha;
    std::string beta;
    std::vector<std::string> lambda;
    std::vector<Root> roots;
    std::vector<Class> classes;
    std::map<std::string, double> timings_ms;  ///< omitted from output when empty

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Timings are wall-clock and so are only copied when asked for; without them
/// the document is a pure function of the form.
ReportDocument to_document(const PRepReport& report, bool with_timings = false);

/// Pretty-printed JSON with sorted keys, terminated by a newline.
std::string emit_report(const ReportDocument& doc);

/// Inverse of emit_report; throws ParseError on malformed input.
ReportDocument parse_report(std::string_view text);

}  // namespace tbk
