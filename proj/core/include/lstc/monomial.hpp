#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lstc {

/// A power product of the generators, stored as one exponent per generator.
/// The generator list (and hence the vector length) is owned by the
/// surrounding presentation/algebra.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    /// Word length: total number of generator factors.
    int length() const {
        int n = 0;
        for (auto e : exponents) n += static_cast<int>(e);
        return n;
    }

    bool is_unit() const {
        for (auto e : exponents)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
};

/// Cohomological degree of a monomial given the generator degrees.
inline int degree_of(const Monomial& m, const std::vector<int>& gen_degrees) {
    int d = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        d += static_cast<int>(m.exponents[i]) * gen_degrees[i];
    return d;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.exponents.resize(a.exponents.size());
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        out.exponents[i] = a.exponents[i] + b.exponents[i];
    return out;
}

/// The monomial order used everywhere: lexicographic with earlier-declared
/// generators dominant. Sorting with this comparator puts the greatest
/// monomial first, which is the column order of the per-degree elimination.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.exponents.size() < b.exponents.size() ? a.exponents.size()
                                                                      : b.exponents.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
        }
        return a.exponents.size() > b.exponents.size();
    }
};

/// Renders "a1^2*a2^3"; the unit monomial renders as "1". The output parses
/// back under the presentation expression grammar.
inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace lstc
