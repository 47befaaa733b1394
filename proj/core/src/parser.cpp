#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lstc/errors.hpp"
#include "lstc/presentation.hpp"

namespace lstc {

namespace {

/// Cursor over one line of the document; tracks the column for errors.
class LineScanner {
public:
    LineScanner(std::string_view text, int line_no) : text_(text), line_(line_no) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    int column() const { return static_cast<int>(pos_) + 1; }
    int line() const { return line_; }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line_, column()); }

    std::string read_identifier() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Unsigned decimal integer of arbitrary size.
    Integer read_integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long read_small_integer(const char* what, long max_value) {
        const int col = column();
        Integer v = read_integer();
        if (v > max_value) throw SyntaxError(std::string(what) + " out of range", line_, col);
        return v.get_si();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

/// Recursive-descent expression parser over one `rel` line:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := [integer ['*']] factor ('*' factor)*
///   factor := name ['^' positive-integer]
class ExpressionParser {
public:
    ExpressionParser(LineScanner& scan, const RingPresentation& decl) : scan_(scan), decl_(decl) {}

    std::map<Monomial, Integer, MonomialGreater> parse() {
        std::map<Monomial, Integer, MonomialGreater> terms;
        bool negative = false;
        if (scan_.peek() == '-') {
            scan_.advance();
            negative = true;
        }
        parse_term(terms, negative);
        while (!scan_.at_end()) {
            const char c = scan_.peek();
            if (c == '+')
                negative = false;
            else if (c == '-')
                negative = true;
            else
                scan_.fail("expected '+' or '-'");
            scan_.advance();
            parse_term(terms, negative);
        }
        // drop collected zeros
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second == 0) ? terms.erase(it) : std::next(it);
        return terms;
    }

private:
    void parse_term(std::map<Monomial, Integer, MonomialGreater>& terms, bool negative) {
        Integer coeff(1);
        if (std::isdigit(static_cast<unsigned char>(scan_.peek()))) {
            coeff = scan_.read_integer();
            if (scan_.peek() == '*') scan_.advance();
        }
        Monomial mono(std::vector<std::uint32_t>(decl_.generators.size(), 0));
        parse_factor(mono);
        while (scan_.peek() == '*') {
            scan_.advance();
            parse_factor(mono);
        }
        if (negative) coeff = -coeff;
        auto [it, inserted] = terms.emplace(std::move(mono), coeff);
        if (!inserted) it->second += coeff;
    }

    void parse_factor(Monomial& mono) {
        const int col = scan_.column();
        const std::string name = scan_.read_identifier();
        const auto idx = decl_.generator_index(name);
        if (!idx) throw UnknownGeneratorError(name);
        std::uint32_t exp = 1;
        if (scan_.peek() == '^') {
            scan_.advance();
            const long e = scan_.read_small_integer("exponent", 1000000L);
            if (e < 1) throw SyntaxError("exponent must be positive", scan_.line(), col);
            exp = static_cast<std::uint32_t>(e);
        }
        mono.exponents[*idx] += exp;
    }

    LineScanner& scan_;
    const RingPresentation& decl_;
};

}  // namespace

RingPresentation parse_presentation(std::string_view text) {
    RingPresentation p;
    bool saw_relation = false;
    bool saw_maxdeg = false;

    std::istringstream lines{std::string(text)};
    std::string raw_line;
    int line_no = 0;
    while (std::getline(lines, raw_line)) {
        ++line_no;
        // strip comment
        if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.resize(hash);
        LineScanner scan(raw_line, line_no);
        if (scan.at_end()) continue;

        const std::string keyword = scan.read_identifier();
        if (keyword == "gen") {
            if (saw_relation)
                scan.fail("generator declarations must precede relations");
            GeneratorSpec g;
            g.name = scan.read_identifier();
            if (p.generator_index(g.name)) throw DuplicateGeneratorError(g.name);
            g.degree = static_cast<int>(scan.read_small_integer("degree", 1000000L));
            if (g.degree <= 0 || g.degree % 2 != 0) throw OddDegreeError(g.name, g.degree);
            if (!scan.at_end()) scan.fail("unexpected trailing input after generator");
            p.generators.push_back(std::move(g));
        } else if (keyword == "rel") {
            saw_relation = true;
            ExpressionParser expr(scan, p);
            RelationPoly r;
            r.terms = expr.parse();
            if (r.terms.empty()) continue;  // fully cancelled
            const auto degrees = p.generator_degrees();
            const int d0 = degree_of(r.terms.begin()->first, degrees);
            for (const auto& [m, c] : r.terms) {
                const int d = degree_of(m, degrees);
                if (d != d0)
                    throw InhomogeneousRelationError(
                        relation_to_string(r, p.generator_names()) + " (line " +
                            std::to_string(line_no) + ")",
                        d0, d);
            }
            p.relations.push_back(std::move(r));
        } else if (keyword == "maxdeg") {
            if (saw_maxdeg) scan.fail("duplicate maxdeg line");
            saw_maxdeg = true;
            p.max_degree = static_cast<int>(scan.read_small_integer("maxdeg", 1000000L));
            if (!scan.at_end()) scan.fail("unexpected trailing input after maxdeg");
        } else {
            throw SyntaxError("unknown directive '" + keyword + "'", line_no, 1);
        }
    }

    p.validate();
    return p;
}

}  // namespace lstc
