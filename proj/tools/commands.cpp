#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "lstc/errors.hpp"
#include "lstc/spaces.hpp"
#include "lstc/tensor.hpp"
#include "report_document.hpp"

namespace lstc::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Check {
    std::string what;
    bool ok;
};

/// Re-checks that apply to every report: the witnesses must reproduce under a
/// fresh evaluation.
void verify_witnesses(const BoundsReport& rep, std::vector<Check>& checks) {
    const QuotientAlgebra A = QuotientAlgebra::build(rep.space.presentation);
    const Truncation policy = A.cap_sound() ? Truncation::Strict : Truncation::Drop;

    const AlgebraElement cup_value = A.monomial_element(rep.cup.witness, policy);
    checks.push_back({"cup witness has nonzero normal form", !cup_value.is_zero()});
    checks.push_back({"cup witness word length equals cup",
                      rep.cup.witness.length() == rep.cup.cup_length});

    TensorElement product = tensor_unit(A);
    int total = 0;
    for (std::size_t g = 0; g < rep.zcl.witness.size(); ++g) {
        total += rep.zcl.witness[g];
        const TensorElement zd = zero_divisor(A, A.generator_names()[g]);
        for (int k = 0; k < rep.zcl.witness[g]; ++k) product = t_multiply(A, product, zd, policy);
    }
    checks.push_back({"zcl witness product of zero-divisors is nonzero", !is_zero(product)});
    checks.push_back({"zcl witness multiplicities sum to the lower bound",
                      total == rep.zcl.lower});
    if (A.cap_sound()) {
        int sum = 0;
        for (int b : rep.betti) sum += b;
        checks.push_back({"betti numbers sum to the total dimension",
                          sum == A.total_dimension()});
    }
}

/// Closed-form re-checks for F(CP^n,2): the headline identities plus the
/// binomial coefficient of the top zero-divisor product.
void verify_fcpn(int n, const BoundsReport& rep, std::vector<Check>& checks) {
    checks.push_back({"cup equals 2n-1", rep.cup.cup_length == 2 * n - 1});
    checks.push_back({"cat exact and equals 2n",
                      rep.cat && rep.cat->exact && *rep.cat->exact == 2 * n});
    checks.push_back({"zcl exact and equals 4n-2",
                      rep.zcl.exact && rep.zcl.lower == 4 * n - 2});
    checks.push_back({"tc exact and equals 4n-1",
                      rep.tc && rep.tc->exact && *rep.tc->exact == 4 * n - 1});
    checks.push_back({"ganea condition holds", rep.ganea});

    bool betti_ok = true;
    const BettiVector kunneth = kunneth_betti(n);
    for (int q = 0; q <= 4 * n; ++q) {
        const int closed = betti_closed_form(n, q);
        const int conv = q < static_cast<int>(kunneth.size()) ? kunneth[q] : 0;
        const int algebraic = q < static_cast<int>(rep.betti.size()) ? rep.betti[q] : 0;
        if (closed != conv || conv != algebraic) betti_ok = false;
    }
    checks.push_back({"betti numbers: closed form = convolution = algebra", betti_ok});

    // (1 (x) a1 - a1 (x) 1)^{2n-1} (1 (x) a2 - a2 (x) 1)^{2n-1}
    //   = 2 p^2 (a1^{n-1} a2^n (x) a1^{n-1} a2^n),  p = +-C(2n-1, n-1)
    const QuotientAlgebra A = QuotientAlgebra::build(rep.space.presentation);
    const TensorElement product =
        t_multiply(A, t_power(A, zero_divisor(A, "a1"), 2 * n - 1),
                   t_power(A, zero_divisor(A, "a2"), 2 * n - 1));
    const Integer p = binomial(2 * n - 1, n - 1);
    const Monomial top({static_cast<std::uint32_t>(n - 1), static_cast<std::uint32_t>(n)});
    TensorElement expected;
    expected.terms.emplace(std::make_pair(top, top), Rational(2 * p * p));
    checks.push_back({"top zero-divisor product equals 2*C(2n-1,n-1)^2 on the top class",
                      product == expected});
}

/// Prints the verify lines; returns true when everything passed.
bool emit_checks(const std::vector<Check>& checks, std::ostream& err) {
    bool all_ok = true;
    for (const auto& c : checks) {
        err << "verify: " << c.what << ": " << (c.ok ? "ok" : "FAIL") << "\n";
        if (!c.ok) all_ok = false;
    }
    return all_ok;
}

int render_single(const ReportDocument& doc, const CommonOptions& opts, std::ostream& out) {
    if (opts.format == Format::Json)
        out << doc.to_json().dump(2) << "\n";
    else
        out << doc.to_table();
    return exit_ok;
}

std::optional<int> guard_n(int n, const CommonOptions& opts, std::ostream& err) {
    if (n < 1) {
        err << "usage error: n must be >= 1\n";
        return exit_usage_error;
    }
    if (n > default_max_n && !opts.allow_large) {
        err << "usage error: n = " << n << " exceeds the guard rail " << default_max_n
            << " (pass --allow-large to override)\n";
        return exit_usage_error;
    }
    return std::nullopt;
}

}  // namespace

int cmd_fcpn(int n, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    if (auto rc = guard_n(n, opts, err)) return *rc;
    try {
        const auto start = Clock::now();
        const BoundsReport rep = report(fcpn_space(n));
        const ReportDocument doc = make_document(rep, n, elapsed_ms(start));
        render_single(doc, opts, out);
        if (opts.verify) {
            std::vector<Check> checks;
            verify_witnesses(rep, checks);
            verify_fcpn(n, rep, checks);
            if (!emit_checks(checks, err)) return exit_computation_error;
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_computation_error;
    }
}

int cmd_ring(const RingOptions& ring, const CommonOptions& opts, std::ostream& out,
             std::ostream& err) {
    if (ring.cw_dimension.has_value() != ring.connectivity.has_value()) {
        err << "usage error: --cw-dim and --connectivity must be given together\n";
        return exit_usage_error;
    }
    if (ring.connectivity && *ring.connectivity < 1) {
        err << "usage error: --connectivity must be >= 1\n";
        return exit_usage_error;
    }
    try {
        std::ifstream file(ring.path);
        if (!file) {
            err << "error: cannot open '" << ring.path << "'\n";
            return exit_computation_error;
        }
        std::ostringstream text;
        text << file.rdbuf();

        SpaceInfo space;
        space.name = ring.path;
        space.presentation = parse_presentation(text.str());
        if (ring.max_degree) space.presentation.max_degree = ring.max_degree;
        space.cw_dimension = ring.cw_dimension;
        space.connectivity = ring.connectivity;
        space.paracompact = ring.paracompact;

        const auto start = Clock::now();
        const BoundsReport rep = report(space);
        const ReportDocument doc = make_document(rep, std::nullopt, elapsed_ms(start));
        render_single(doc, opts, out);
        if (opts.verify) {
            std::vector<Check> checks;
            verify_witnesses(rep, checks);
            if (!emit_checks(checks, err)) return exit_computation_error;
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << ring.path << ": " << e.what() << "\n";
        return exit_computation_error;
    }
}

int cmd_sweep(int from, int to, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    if (from < 1 || to < from) {
        err << "usage error: sweep requires 1 <= from <= to\n";
        return exit_usage_error;
    }
    if (auto rc = guard_n(to, opts, err)) return *rc;
    try {
        bool deviation = false;
        bool verify_failed = false;
        Json rows = Json::array();
        std::ostringstream table;
        table << std::setw(4) << "n" << std::setw(6) << "cup" << std::setw(6) << "cat"
              << std::setw(6) << "zcl" << std::setw(6) << "tc" << std::setw(8) << "ganea"
              << std::setw(6) << "ms" << "  check\n";
        for (int n = from; n <= to; ++n) {
            const auto start = Clock::now();
            const BoundsReport rep = report(fcpn_space(n));
            const long long ms = elapsed_ms(start);

            const bool row_ok = rep.cup.cup_length == 2 * n - 1 && rep.cat && rep.cat->exact &&
                                *rep.cat->exact == 2 * n && rep.zcl.exact &&
                                rep.zcl.lower == 4 * n - 2 && rep.tc && rep.tc->exact &&
                                *rep.tc->exact == 4 * n - 1 && rep.ganea;
            if (!row_ok) deviation = true;

            if (opts.verify) {
                std::vector<Check> checks;
                verify_witnesses(rep, checks);
                verify_fcpn(n, rep, checks);
                err << "verify n=" << n << ":\n";
                if (!emit_checks(checks, err)) verify_failed = true;
            }

            table << std::setw(4) << n << std::setw(6) << rep.cup.cup_length << std::setw(6)
                  << (rep.cat->exact ? *rep.cat->exact : rep.cat->lower) << std::setw(6)
                  << rep.zcl.lower << std::setw(6)
                  << (rep.tc->exact ? *rep.tc->exact : rep.tc->lower) << std::setw(8)
                  << (rep.ganea ? "yes" : "no") << std::setw(6) << ms << "  "
                  << (row_ok ? "ok" : "DEVIATION from cup=2n-1, cat=2n, tc=4n-1") << "\n";

            Json row;
            row["n"] = n;
            row["cup"] = rep.cup.cup_length;
            row["cat"] = rep.cat->exact ? Json(*rep.cat->exact) : Json(nullptr);
            row["zcl"] = rep.zcl.lower;
            row["tc"] = rep.tc->exact ? Json(*rep.tc->exact) : Json(nullptr);
            row["ganea"] = rep.ganea;
            row["check"] = row_ok ? "ok" : "deviation";
            row["timing_ms"] = ms;
            rows.push_back(std::move(row));
        }
        if (opts.format == Format::Json) {
            Json j;
            j["schema_version"] = schema_version;
            j["from"] = from;
            j["to"] = to;
            j["rows"] = std::move(rows);
            out << j.dump(2) << "\n";
        } else {
            out << table.str();
        }
        if (deviation) {
            err << "error: at least one row deviates from the certified identities\n";
            return exit_computation_error;
        }
        return verify_failed ? exit_computation_error : exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_computation_error;
    }
}

int cmd_compare(int n, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    if (auto rc = guard_n(n, opts, err)) return *rc;
    try {
        const auto start_f = Clock::now();
        const BoundsReport conf = report(fcpn_space(n));
        const long long ms_f = elapsed_ms(start_f);

        const auto start_p = Clock::now();
        const BoundsReport prod = report(product_space(cpn_space(n), cpn_space(n)));
        const long long ms_p = elapsed_ms(start_p);

        const ReportDocument doc_f = make_document(conf, n, ms_f);
        const ReportDocument doc_p = make_document(prod, n, ms_p);

        std::optional<int> difference;
        if (conf.tc && conf.tc->exact && prod.tc && prod.tc->exact)
            difference = *prod.tc->exact - *conf.tc->exact;

        if (opts.format == Format::Json) {
            Json j;
            j["schema_version"] = schema_version;
            j["n"] = n;
            j["fcpn"] = doc_f.to_json();
            j["product"] = doc_p.to_json();
            j["tc_difference"] = difference ? Json(*difference) : Json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            out << "n                  " << n << "\n";
            out << "TC " << std::left << std::setw(16) << conf.space.name << std::right
                << (conf.tc->exact ? std::to_string(*conf.tc->exact)
                                   : std::to_string(conf.tc->lower) + "..?")
                << (conf.tc->exact ? "  (exact)" : "") << "\n";
            out << "TC " << std::left << std::setw(16) << prod.space.name << std::right
                << (prod.tc->exact ? std::to_string(*prod.tc->exact)
                                   : std::to_string(prod.tc->lower) + "..?")
                << (prod.tc->exact ? "  (exact)" : "") << "\n";
            out << "difference         "
                << (difference ? std::to_string(*difference) : std::string("-")) << "\n";
        }

        if (opts.verify) {
            std::vector<Check> checks;
            verify_witnesses(conf, checks);
            verify_fcpn(n, conf, checks);
            verify_witnesses(prod, checks);
            checks.push_back({"product TC exceeds configuration TC by exactly 2",
                              difference.has_value() && *difference == 2});
            if (!emit_checks(checks, err)) return exit_computation_error;
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_computation_error;
    }
}

}  // namespace lstc::cli
