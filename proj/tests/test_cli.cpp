#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "lstc/spaces.hpp"
#include "report_document.hpp"

using namespace lstc;
using namespace lstc::cli;

namespace {

Json json_of(int n) {
    const auto rep = report(fcpn_space(n));
    return make_document(rep, n, 0).to_json();
}

/// Runs the installed binary; returns its exit code, filling out/err text.
int run_cli(const std::string& args, std::string* out_text = nullptr) {
    const std::string out_path = "/tmp/lstc_cli_out.txt";
    const std::string cmd =
        std::string(LSTC_CLI_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out_text) {
        std::ifstream f(out_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        *out_text = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("document key order and round trip") {
    const Json j = json_of(2);
    const std::vector<std::string> expected_keys{"schema_version", "space", "n",
                                                 "betti",          "cup",   "zcl",
                                                 "cat",            "tc",    "ganea",
                                                 "witnesses",      "timing_ms"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);

    const auto reparsed = Json::parse(j.dump(2));
    CHECK(reparsed == j);
}

TEST_CASE("reports are byte-identical apart from timing") {
    auto make = [] {
        const auto rep = report(fcpn_space(3));
        auto doc = make_document(rep, 3, 0);
        doc.timing_ms = 0;
        return doc.to_json().dump(2);
    };
    CHECK(make() == make());
}

TEST_CASE("fcpn table carries the headline values") {
    std::ostringstream out, err;
    CommonOptions opts;
    REQUIRE(cmd_fcpn(3, opts, out, err) == exit_ok);
    const std::string table = out.str();
    CHECK(table.find("cup            5") != std::string::npos);
    CHECK(table.find("zcl            10..10") != std::string::npos);
    CHECK(table.find("cat            6..6  (exact 6)") != std::string::npos);
    CHECK(table.find("tc             11..11  (exact 11)") != std::string::npos);
    CHECK(table.find("ganea          yes") != std::string::npos);
}

TEST_CASE("fcpn n=1 JSON reports TC exactly 3") {
    const Json j = json_of(1);
    CHECK(j["tc"]["exact"] == 3);
    CHECK(j["cup"]["value"] == 1);
    CHECK(j["betti"] == Json::array({1, 0, 1}));
}

TEST_CASE("a custom file reproducing the n=2 ring matches fcpn --n 2 field by field") {
    const std::string path = "/tmp/lstc_custom_fcpn2.ring";
    {
        std::ofstream f(path);
        f << to_text(fcpn_presentation(2));
    }
    std::ostringstream ring_out, err;
    CommonOptions opts;
    opts.format = Format::Json;
    RingOptions ring_opts;
    ring_opts.path = path;
    ring_opts.cw_dimension = 6;
    ring_opts.connectivity = 1;
    REQUIRE(cmd_ring(ring_opts, opts, ring_out, err) == exit_ok);
    const Json ring_json = Json::parse(ring_out.str());
    const Json fcpn_json = json_of(2);
    for (const char* key : {"betti", "cup", "zcl", "cat", "tc", "ganea", "witnesses"}) {
        CAPTURE(key);
        CHECK(ring_json[key] == fcpn_json[key]);
    }
    CHECK(ring_json["space"]["cw_dimension"] == fcpn_json["space"]["cw_dimension"]);
    CHECK(ring_json["space"]["connectivity"] == fcpn_json["space"]["connectivity"]);
}

TEST_CASE("witness strings parse back under the expression grammar") {
    const Json j = json_of(3);
    const std::string cup_witness = j["witnesses"]["cup"];
    const std::string zcl_witness = j["witnesses"]["zcl"];
    const std::string doc = "gen a1 2\ngen a2 2\nrel " + cup_witness + "\nrel " + zcl_witness +
                            "\n";
    CHECK_NOTHROW(parse_presentation(doc));
}

TEST_CASE("sweep single row equals the fcpn report") {
    std::ostringstream out, err;
    CommonOptions opts;
    opts.format = Format::Json;
    REQUIRE(cmd_sweep(2, 2, opts, out, err) == exit_ok);
    const Json sweep = Json::parse(out.str());
    REQUIRE(sweep["rows"].size() == 1);
    const Json& row = sweep["rows"][0];
    const Json single = json_of(2);
    CHECK(row["cup"] == single["cup"]["value"]);
    CHECK(row["cat"] == single["cat"]["exact"]);
    CHECK(row["zcl"] == single["zcl"]["lower"]);
    CHECK(row["tc"] == single["tc"]["exact"]);
    CHECK(row["check"] == "ok");
}

TEST_CASE("compare values across small n") {
    struct Row {
        int n, conf, prod;
    };
    for (const Row r : {Row{1, 3, 5}, Row{2, 7, 9}, Row{4, 15, 17}}) {
        CAPTURE(r.n);
        std::ostringstream out, err;
        CommonOptions opts;
        opts.format = Format::Json;
        REQUIRE(cmd_compare(r.n, opts, out, err) == exit_ok);
        const Json j = Json::parse(out.str());
        CHECK(j["fcpn"]["tc"]["exact"] == r.conf);
        CHECK(j["product"]["tc"]["exact"] == r.prod);
        CHECK(j["tc_difference"] == 2);
    }
}

TEST_CASE("algebra-only ring output is labeled") {
    const std::string path = "/tmp/lstc_truncated.ring";
    {
        std::ofstream f(path);
        f << "gen x 2\n";
    }
    std::ostringstream out, err;
    CommonOptions opts;
    RingOptions ring_opts;
    ring_opts.path = path;
    ring_opts.max_degree = 8;
    REQUIRE(cmd_ring(ring_opts, opts, out, err) == exit_ok);
    CHECK(out.str().find("lower bound (truncated)") != std::string::npos);
    CHECK(out.str().find("algebra-only mode") != std::string::npos);
}

TEST_CASE("exit codes through the real binary") {
    CHECK(run_cli("fcpn --n 2") == 0);
    CHECK(run_cli("fcpn --n 0") == 2);
    CHECK(run_cli("fcpn --n 100") == 2);      // guard rail
    CHECK(run_cli("fcpn") == 2);              // missing required option
    CHECK(run_cli("sweep --from 3 --to 1") == 2);
    CHECK(run_cli("ring /nonexistent.ring") == 1);
    CHECK(run_cli("nonsense") == 2);

    const std::string unbounded = "/tmp/lstc_unbounded.ring";
    {
        std::ofstream f(unbounded);
        f << "gen x 2\n";
    }
    CHECK(run_cli("ring " + unbounded) == 1);  // UnboundedAlgebra

    std::string text;
    CHECK(run_cli("fcpn --n 2 --format json", &text) == 0);
    const Json j = Json::parse(text);
    CHECK(j["tc"]["exact"] == 7);

    CHECK(run_cli("fcpn --n 2 --verify") == 0);
    CHECK(run_cli("compare --n 2 --verify") == 0);
    CHECK(run_cli("sweep --from 1 --to 3 --verify") == 0);
}
