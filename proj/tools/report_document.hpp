#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lstc/bounds.hpp"

namespace lstc::cli {

using Json = nlohmann::ordered_json;

/// The CLI's serialized report. Keys are emitted in a fixed order
/// (schema_version, space, n, betti, cup, zcl, cat, tc, ganea, witnesses,
/// timing_ms) so that output bytes are stable for fixed input, the timing
/// field aside. All mathematical fields are exact integers.
struct ReportDocument {
    BoundsReport report;
    std::optional<int> n;  ///< catalog parameter when the space has one
    long long timing_ms = 0;

    std::string cup_witness_string() const;
    std::string zcl_witness_string() const;

    Json to_json() const;
    std::string to_table() const;
};

ReportDocument make_document(const BoundsReport& report, std::optional<int> n,
                             long long timing_ms);

inline const char* schema_version = "1";

}  // namespace lstc::cli
