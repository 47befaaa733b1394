#pragma once

#include <random>
#include <vector>

#include "lstc/algebra.hpp"

namespace test_support {

inline lstc::Monomial mono(std::vector<std::uint32_t> e) { return lstc::Monomial(std::move(e)); }

inline lstc::RawPoly raw(std::vector<std::pair<lstc::Monomial, lstc::Rational>> terms) {
    lstc::RawPoly out;
    for (auto& [m, c] : terms) {
        auto [it, inserted] = out.emplace(std::move(m), c);
        if (!inserted) it->second += c;
    }
    return out;
}

/// Random homogeneous element: a few random monomials of one random even
/// degree within the cap, with small nonzero integer coefficients.
inline lstc::AlgebraElement random_homogeneous(const lstc::QuotientAlgebra& A,
                                               std::mt19937_64& rng) {
    const int max_degree = A.cap();
    std::uniform_int_distribution<int> degree_dist(0, max_degree / 2);
    const int d = 2 * degree_dist(rng);
    const auto monomials = A.monomials_of_degree(d);
    if (monomials.empty()) return A.unit();

    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    std::uniform_int_distribution<int> count_dist(1, 3);

    lstc::RawPoly poly;
    const int terms = count_dist(rng);
    for (int i = 0; i < terms; ++i) {
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        auto [it, inserted] = poly.emplace(monomials[pick(rng)], lstc::Rational(c));
        if (!inserted) it->second += c;
    }
    return A.normal_form(poly, lstc::Truncation::Drop);
}

}  // namespace test_support
