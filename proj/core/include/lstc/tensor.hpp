#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lstc/algebra.hpp"

namespace lstc {

/// An element of H (x) H. Both components of every stored pair are basis
/// monomials of the owning algebra; coefficients are nonzero rationals.
struct TensorElement {
    struct PairGreater {
        bool operator()(const std::pair<Monomial, Monomial>& a,
                        const std::pair<Monomial, Monomial>& b) const {
            MonomialGreater g;
            if (a.first != b.first) return g(a.first, b.first);
            return g(a.second, b.second);
        }
    };

    std::map<std::pair<Monomial, Monomial>, Rational, PairGreater> terms;

    bool is_zero() const { return terms.empty(); }

    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

/// True iff x has no terms.
bool is_zero(const TensorElement& x);

/// 1 (x) 1.
TensorElement tensor_unit(const QuotientAlgebra& A);

/// The canonical zero-divisor 1 (x) g - g (x) 1 of a generator, with both
/// components reduced to normal form.
TensorElement zero_divisor(const QuotientAlgebra& A, std::string_view gen_name);

/// x (x) y for arbitrary elements.
TensorElement tensor_of(const QuotientAlgebra& A, const AlgebraElement& x,
                        const AlgebraElement& y);

/// Builds a tensor element from raw (monomial, monomial, coefficient) triples,
/// reducing each component to normal form.
TensorElement make_tensor(const QuotientAlgebra& A,
                          const std::vector<std::tuple<Monomial, Monomial, Rational>>& raw,
                          Truncation t = Truncation::Strict);

/// Componentwise product (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2. No sign
/// factor: every degree in the algebra is even. Terms whose component degree
/// exceeds the top degree are pruned immediately.
TensorElement t_multiply(const QuotientAlgebra& A, const TensorElement& x,
                         const TensorElement& y, Truncation t = Truncation::Strict);

/// Repeated t_multiply; t_power(x, 0) = 1 (x) 1.
TensorElement t_power(const QuotientAlgebra& A, const TensorElement& x, int k,
                      Truncation t = Truncation::Strict);

TensorElement t_add(const QuotientAlgebra& A, const TensorElement& x, const TensorElement& y);
TensorElement t_subtract(const QuotientAlgebra& A, const TensorElement& x,
                         const TensorElement& y);

std::string tensor_to_string(const QuotientAlgebra& A, const TensorElement& x);

}  // namespace lstc
