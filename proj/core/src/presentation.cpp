#include "lstc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lstc/errors.hpp"

namespace lstc {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

void RingPresentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (!valid_identifier(g.name))
            throw InvalidParameterError("generator name '" + g.name + "' is not an identifier");
        if (g.degree <= 0 || g.degree % 2 != 0) throw OddDegreeError(g.name, g.degree);
        if (!seen.insert(g.name).second) throw DuplicateGeneratorError(g.name);
    }
    const auto degrees = generator_degrees();
    const auto names = generator_names();
    for (const auto& r : relations) {
        if (r.empty()) continue;
        const int d0 = degree_of(r.terms.begin()->first, degrees);
        for (const auto& [m, c] : r.terms) {
            if (c == 0)
                throw InvalidParameterError("relation " + relation_to_string(r, names) +
                                            " stores a zero coefficient");
            if (m.exponents.size() != generators.size())
                throw InvalidParameterError("relation term arity does not match generator count");
            const int d = degree_of(m, degrees);
            if (d != d0) throw InhomogeneousRelationError(relation_to_string(r, names), d0, d);
        }
    }
    if (max_degree && *max_degree < 0)
        throw InvalidParameterError("max_degree must be nonnegative");
}

std::string relation_to_string(const RelationPoly& r, const std::vector<std::string>& names) {
    if (r.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : r.terms) {
        Integer a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::string mono = monomial_to_string(m, names);
        if (a != 1 || mono == "1") {
            out += a.get_str();
            if (mono != "1") out += "*";
        }
        if (mono != "1") out += mono;
    }
    return out;
}

std::string to_text(const RingPresentation& p) {
    std::string out;
    for (const auto& g : p.generators)
        out += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
    if (p.max_degree) out += "maxdeg " + std::to_string(*p.max_degree) + "\n";
    const auto names = p.generator_names();
    for (const auto& r : p.relations) {
        if (r.empty()) continue;
        out += "rel " + relation_to_string(r, names) + "\n";
    }
    return out;
}

RingPresentation fcpn_presentation(int n) {
    if (n < 1) throw InvalidParameterError("fcpn_presentation requires n >= 1");
    RingPresentation p;
    p.generators = {{"a1", 2}, {"a2", 2}};

    RelationPoly rn;  // a1^n + a1^{n-1} a2 + ... + a2^n
    for (int i = 0; i <= n; ++i) {
        Monomial m({static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)});
        rn.terms.emplace(std::move(m), Integer(1));
    }
    RelationPoly p1;
    p1.terms.emplace(Monomial({static_cast<std::uint32_t>(n + 1), 0}), Integer(1));
    RelationPoly p2;
    p2.terms.emplace(Monomial({0, static_cast<std::uint32_t>(n + 1)}), Integer(1));

    p.relations = {std::move(rn), std::move(p1), std::move(p2)};
    return p;
}

RingPresentation cpn_presentation(int n) {
    if (n < 1) throw InvalidParameterError("cpn_presentation requires n >= 1");
    RingPresentation p;
    p.generators = {{"a", 2}};
    RelationPoly top;
    top.terms.emplace(Monomial({static_cast<std::uint32_t>(n + 1)}), Integer(1));
    p.relations = {std::move(top)};
    return p;
}

namespace {

/// Lifts a relation over the concatenated generator list, shifting exponent
/// vectors into the [offset, offset+arity) slots.
RelationPoly lift_relation(const RelationPoly& r, std::size_t offset, std::size_t total) {
    RelationPoly out;
    for (const auto& [m, c] : r.terms) {
        Monomial lifted(std::vector<std::uint32_t>(total, 0));
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            lifted.exponents[offset + i] = m.exponents[i];
        out.terms.emplace(std::move(lifted), c);
    }
    return out;
}

}  // namespace

RingPresentation product_presentation(const RingPresentation& p1, const RingPresentation& p2) {
    p1.validate();
    p2.validate();

    std::set<std::string> left_names, right_names;
    for (const auto& g : p1.generators) left_names.insert(g.name);
    for (const auto& g : p2.generators) right_names.insert(g.name);

    RingPresentation out;
    for (const auto& g : p1.generators) {
        GeneratorSpec spec = g;
        if (right_names.count(g.name)) spec.name += "_L";
        out.generators.push_back(std::move(spec));
    }
    for (const auto& g : p2.generators) {
        GeneratorSpec spec = g;
        if (left_names.count(g.name)) spec.name += "_R";
        out.generators.push_back(std::move(spec));
    }

    const std::size_t total = out.generators.size();
    for (const auto& r : p1.relations) out.relations.push_back(lift_relation(r, 0, total));
    for (const auto& r : p2.relations)
        out.relations.push_back(lift_relation(r, p1.generators.size(), total));

    // A cap is only meaningful for the product when both factors carry one.
    if (p1.max_degree && p2.max_degree) out.max_degree = *p1.max_degree + *p2.max_degree;

    out.validate();
    return out;
}

}  // namespace lstc
