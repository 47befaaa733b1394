#pragma once

#include <vector>

#include "lstc/algebra.hpp"

namespace lstc {

/// Cup-length of the algebra: the largest L such that some L-fold product of
/// positive-degree classes is nonzero, so cat >= cup_length + 1 under the
/// cat(point) = 1 normalization.
struct CupResult {
    int cup_length = 0;
    /// A generator monomial of word length cup_length with nonzero normal form.
    Monomial witness;
    /// True when the cap is sound; otherwise cup_length is only a lower bound.
    bool exact = false;
};

/// Zero-divisor cup-length bounds. lower is certified by an explicit witness;
/// upper comes from degree counting. exact means the two coincide (and the
/// cap is sound).
struct ZclResult {
    int lower = 0;
    int upper = 0;
    /// Multiplicity of each generator's zero-divisor in the witness product.
    std::vector<int> witness;
    bool exact = false;
};

/// Exhaustive search over generator monomials, bounded componentwise by each
/// generator's nilpotency order minus one (by the cap when it is not sound).
/// Every product of L positive-degree elements expands into generator
/// monomials of word length >= L and every length-L monomial is such a
/// product, so this computes cup exactly for sound caps.
CupResult cup_length(const QuotientAlgebra& A);

/// lower: longest nonvanishing product of generator zero-divisors, found by
/// exhaustive search in decreasing total length (within a length class the
/// most balanced multiplicity vector is tried first, ties broken by the
/// lexicographically smallest vector). upper: floor(2 * top_degree / min
/// generator degree).
ZclResult zcl(const QuotientAlgebra& A);

}  // namespace lstc
