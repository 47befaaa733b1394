#include "report_document.hpp"

#include <sstream>

namespace lstc::cli {

namespace {

std::string interval_string(const BoundInterval& iv) {
    std::string out = std::to_string(iv.lower) + "..";
    out += iv.upper ? std::to_string(*iv.upper) : "?";
    if (iv.exact) out += "  (exact " + std::to_string(*iv.exact) + ")";
    return out;
}

Json interval_json(const std::optional<BoundInterval>& iv) {
    if (!iv) return nullptr;
    Json j;
    j["lower"] = iv->lower;
    j["upper"] = iv->upper ? Json(*iv->upper) : Json(nullptr);
    j["exact"] = iv->exact ? Json(*iv->exact) : Json(nullptr);
    return j;
}

}  // namespace

std::string ReportDocument::cup_witness_string() const {
    return monomial_to_string(report.cup.witness, report.space.presentation.generator_names());
}

std::string ReportDocument::zcl_witness_string() const {
    // zero-divisor multiplicities rendered in generator-power notation
    Monomial m;
    for (int k : report.zcl.witness) m.exponents.push_back(static_cast<std::uint32_t>(k));
    return monomial_to_string(m, report.space.presentation.generator_names());
}

Json ReportDocument::to_json() const {
    Json j;
    j["schema_version"] = schema_version;

    Json space;
    space["name"] = report.space.name;
    space["cw_dimension"] =
        report.space.cw_dimension ? Json(*report.space.cw_dimension) : Json(nullptr);
    space["connectivity"] =
        report.space.connectivity ? Json(*report.space.connectivity) : Json(nullptr);
    space["paracompact"] = report.space.paracompact;
    space["normalization"] = "cat(point)=1, TC(point)=1";
    space["mode"] = report.algebra_only() ? "algebra-only" : "full";
    space["truncated"] = report.truncated;
    j["space"] = std::move(space);

    j["n"] = n ? Json(*n) : Json(nullptr);
    j["betti"] = report.betti;

    Json cup;
    cup["value"] = report.cup.cup_length;
    cup["exact"] = report.cup.exact;
    j["cup"] = std::move(cup);

    Json zcl;
    zcl["lower"] = report.zcl.lower;
    zcl["upper"] = report.zcl.upper;
    zcl["exact"] = report.zcl.exact;
    j["zcl"] = std::move(zcl);

    j["cat"] = interval_json(report.cat);
    j["tc"] = interval_json(report.tc);
    j["ganea"] = report.ganea;

    Json witnesses;
    witnesses["cup"] = cup_witness_string();
    witnesses["zcl"] = zcl_witness_string();
    j["witnesses"] = std::move(witnesses);

    j["timing_ms"] = timing_ms;
    return j;
}

std::string ReportDocument::to_table() const {
    std::ostringstream out;
    const char* qualifier = report.truncated ? "  [lower bound (truncated)]" : "  (exact)";

    out << "space          " << report.space.name << "\n";
    if (n) out << "n              " << *n << "\n";
    out << "cw-dimension   "
        << (report.space.cw_dimension ? std::to_string(*report.space.cw_dimension) : "-")
        << "\n";
    out << "connectivity   "
        << (report.space.connectivity ? std::to_string(*report.space.connectivity) : "-")
        << "\n";
    out << "paracompact    " << (report.space.paracompact ? "yes" : "no") << "\n";
    out << "normalization  cat(point)=1, TC(point)=1\n";
    out << "betti          ";
    for (std::size_t i = 0; i < report.betti.size(); ++i)
        out << (i ? " " : "") << report.betti[i];
    out << "\n";
    out << "cup            " << report.cup.cup_length << qualifier
        << "  witness " << cup_witness_string() << "\n";
    out << "zcl            " << report.zcl.lower << ".." << report.zcl.upper
        << (report.zcl.exact ? "  (exact)" : report.truncated ? "  [lower bound (truncated)]"
                                                              : "  (bounds only)")
        << "  witness " << zcl_witness_string() << "\n";
    if (report.algebra_only()) {
        out << "cat            -  (algebra-only mode: no CW data)\n";
        out << "tc             -  (algebra-only mode: no CW data)\n";
    } else {
        out << "cat            " << interval_string(*report.cat) << "\n";
        out << "tc             " << interval_string(*report.tc) << "\n";
    }
    out << "ganea          " << (report.ganea ? "yes" : "no") << "\n";
    out << "time           " << timing_ms << " ms\n";
    return out.str();
}

ReportDocument make_document(const BoundsReport& report, std::optional<int> n,
                             long long timing_ms) {
    ReportDocument doc;
    doc.report = report;
    doc.n = n;
    doc.timing_ms = timing_ms;
    return doc;
}

}  // namespace lstc::cli
