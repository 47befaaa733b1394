#include "lstc/invariants.hpp"

#include <algorithm>
#include <map>

#include "lstc/errors.hpp"
#include "lstc/tensor.hpp"

namespace lstc {

namespace {

/// All multiplicity vectors with the given total, componentwise within
/// bounds and with weighted degree at most degree_cap. Lexicographically
/// ascending by construction.
void vectors_with_total(const std::vector<int>& bounds, const std::vector<int>& degrees,
                        int total, int degree_cap, std::size_t pos, int degree_so_far,
                        std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (pos + 1 == current.size()) {
        if (total <= bounds[pos] && degree_so_far + total * degrees[pos] <= degree_cap) {
            current[pos] = total;
            out.push_back(current);
        }
        return;
    }
    const int hi = std::min(bounds[pos], total);
    for (int e = 0; e <= hi; ++e) {
        const int d = degree_so_far + e * degrees[pos];
        if (d > degree_cap) break;
        current[pos] = e;
        vectors_with_total(bounds, degrees, total - e, degree_cap, pos + 1, d, current, out);
    }
    current[pos] = 0;
}

std::vector<std::vector<int>> candidates(const std::vector<int>& bounds,
                                         const std::vector<int>& degrees, int total,
                                         int degree_cap) {
    std::vector<std::vector<int>> out;
    if (bounds.empty()) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current(bounds.size(), 0);
    vectors_with_total(bounds, degrees, total, degree_cap, 0, 0, current, out);
    return out;
}

}  // namespace

CupResult cup_length(const QuotientAlgebra& A) {
    const auto& degrees = A.generator_degrees();
    const std::size_t n_gens = degrees.size();
    const Truncation policy = A.cap_sound() ? Truncation::Strict : Truncation::Drop;

    std::vector<int> bounds(n_gens, 0);
    int length_cap = 0;
    for (std::size_t g = 0; g < n_gens; ++g) {
        bounds[g] = A.cap_sound() ? A.nilpotency_order(g) - 1 : A.cap() / degrees[g];
        length_cap += bounds[g];
    }
    if (n_gens > 0) {
        const int min_degree = *std::min_element(degrees.begin(), degrees.end());
        length_cap = std::min(length_cap, A.cap() / min_degree);
    }

    CupResult result;
    result.exact = A.cap_sound();
    result.witness = Monomial(std::vector<std::uint32_t>(n_gens, 0));
    for (int length = length_cap; length >= 1; --length) {
        for (const auto& v : candidates(bounds, degrees, length, A.cap())) {
            Monomial m(std::vector<std::uint32_t>(v.begin(), v.end()));
            if (!A.monomial_element(m, policy).is_zero()) {
                result.cup_length = length;
                result.witness = std::move(m);
                return result;
            }
        }
    }
    return result;  // cup 0: only the unit survives
}

ZclResult zcl(const QuotientAlgebra& A) {
    const auto& degrees = A.generator_degrees();
    const auto& names = A.generator_names();
    const std::size_t n_gens = degrees.size();
    const Truncation policy = A.cap_sound() ? Truncation::Strict : Truncation::Drop;

    ZclResult result;
    result.witness.assign(n_gens, 0);
    if (n_gens == 0) {
        result.exact = A.cap_sound();
        return result;
    }

    const int top = A.cap_sound() ? A.top_degree() : A.cap();
    const int min_degree = *std::min_element(degrees.begin(), degrees.end());
    result.upper = 2 * top / min_degree;

    // (1 (x) g - g (x) 1)^k survives only if g^j and g^{k-j} are both nonzero
    // for some j, so k <= 2 (nilpotency - 1); component degrees bound it too.
    std::vector<int> bounds(n_gens, 0);
    int length_cap = 0;
    for (std::size_t g = 0; g < n_gens; ++g) {
        bounds[g] = 2 * top / degrees[g];
        if (A.cap_sound()) bounds[g] = std::min(bounds[g], 2 * (A.nilpotency_order(g) - 1));
        length_cap += bounds[g];
    }
    length_cap = std::min(length_cap, result.upper);

    // zero-divisor powers, memoized: powers[g][k] = zero_divisor(g)^k
    std::vector<std::vector<TensorElement>> powers(n_gens);
    for (std::size_t g = 0; g < n_gens; ++g) {
        powers[g].push_back(tensor_unit(A));
        const TensorElement zd = zero_divisor(A, names[g]);
        for (int k = 1; k <= bounds[g]; ++k) {
            powers[g].push_back(t_multiply(A, powers[g].back(), zd, policy));
            if (powers[g].back().is_zero()) {
                bounds[g] = k - 1;
                powers[g].pop_back();
                break;
            }
        }
    }

    for (int length = length_cap; length >= 1; --length) {
        auto pool = candidates(bounds, degrees, length, 2 * top);
        // Balanced multiplicity vectors first, then lexicographically
        // smallest; stable sort keeps the lex order within each balance
        // class.
        std::stable_sort(pool.begin(), pool.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             return *std::max_element(a.begin(), a.end()) <
                                    *std::max_element(b.begin(), b.end());
                         });
        for (const auto& v : pool) {
            TensorElement product = tensor_unit(A);
            for (std::size_t g = 0; g < n_gens && !product.is_zero(); ++g) {
                if (v[g] == 0) continue;
                product = t_multiply(A, product, powers[g][v[g]], policy);
            }
            if (!product.is_zero()) {
                result.lower = length;
                result.witness = v;
                result.exact = A.cap_sound() && length == result.upper;
                return result;
            }
        }
    }
    result.exact = A.cap_sound() && result.upper == 0;
    return result;
}

}  // namespace lstc
