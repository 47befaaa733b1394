#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lstc/monomial.hpp"
#include "lstc/rational.hpp"

namespace lstc {

/// A named generator of even positive cohomological degree.
struct GeneratorSpec {
    std::string name;
    int degree = 0;

    bool operator==(const GeneratorSpec&) const = default;
};

/// A homogeneous polynomial in the generators with integer coefficients,
/// stored as exponent vector -> nonzero coefficient. Terms iterate in the
/// canonical order (greatest monomial first).
struct RelationPoly {
    std::map<Monomial, Integer, MonomialGreater> terms;

    bool empty() const { return terms.empty(); }

    /// Total degree of the relation (all terms agree once validated).
    int degree(const std::vector<int>& gen_degrees) const {
        return terms.empty() ? 0 : degree_of(terms.begin()->first, gen_degrees);
    }

    bool operator==(const RelationPoly&) const = default;
};

/// The input contract for every algebra: an ordered generator list plus a
/// list of homogeneous relations, optionally capped at max_degree.
struct RingPresentation {
    std::vector<GeneratorSpec> generators;
    std::vector<RelationPoly> relations;
    std::optional<int> max_degree;

    std::vector<int> generator_degrees() const {
        std::vector<int> out;
        out.reserve(generators.size());
        for (const auto& g : generators) out.push_back(g.degree);
        return out;
    }

    std::vector<std::string> generator_names() const {
        std::vector<std::string> out;
        out.reserve(generators.size());
        for (const auto& g : generators) out.push_back(g.name);
        return out;
    }

    std::optional<std::size_t> generator_index(std::string_view name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return i;
        return std::nullopt;
    }

    /// Throws DuplicateGeneratorError / OddDegreeError / InvalidParameterError /
    /// InhomogeneousRelationError when an invariant is violated.
    void validate() const;

    bool operator==(const RingPresentation&) const = default;
};

/// Parses a presentation document (see the grammar in the README). Relation
/// expressions are expanded to exponent-vector form with coefficients
/// collected and zero terms dropped.
RingPresentation parse_presentation(std::string_view text);

/// Canonical document form; parse(to_text(p)) == p.
std::string to_text(const RingPresentation& p);

/// Renders one relation in the expression grammar, canonical term order.
std::string relation_to_string(const RelationPoly& r, const std::vector<std::string>& names);

/// H*(F(CP^n,2)): generators a1, a2 of degree 2 with relations
/// a1^n + a1^{n-1} a2 + ... + a2^n, a1^{n+1}, a2^{n+1}.
RingPresentation fcpn_presentation(int n);

/// H*(CP^n): one generator a of degree 2 with the single relation a^{n+1}.
RingPresentation cpn_presentation(int n);

/// Tensor ring of two presentations: concatenated generators (name collisions
/// resolved by the _L/_R suffixes) and the union of the lifted relations.
RingPresentation product_presentation(const RingPresentation& p1, const RingPresentation& p2);

}  // namespace lstc
