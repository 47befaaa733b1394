#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace lstc::cli {

enum class Format { Table, Json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation_error = 1;
inline constexpr int exit_usage_error = 2;

/// Default guard rail on the fcpn/compare/sweep parameter.
inline constexpr int default_max_n = 64;

struct CommonOptions {
    Format format = Format::Table;
    bool verify = false;
    bool allow_large = false;  ///< lifts the n <= 64 guard rail
};

int cmd_fcpn(int n, const CommonOptions& opts, std::ostream& out, std::ostream& err);

struct RingOptions {
    std::string path;
    std::optional<int> max_degree;
    std::optional<int> cw_dimension;
    std::optional<int> connectivity;
    bool paracompact = true;
};

int cmd_ring(const RingOptions& ring, const CommonOptions& opts, std::ostream& out,
             std::ostream& err);

int cmd_sweep(int from, int to, const CommonOptions& opts, std::ostream& out, std::ostream& err);

int cmd_compare(int n, const CommonOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace lstc::cli
