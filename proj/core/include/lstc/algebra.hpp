#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lstc/monomial.hpp"
#include "lstc/presentation.hpp"
#include "lstc/rational.hpp"

namespace lstc {

/// Sparse polynomial prior to reduction: monomial -> coefficient.
using RawPoly = std::map<Monomial, Rational, MonomialGreater>;

/// An element of a quotient algebra, always held in normal form: only basis
/// monomials appear and no coefficient is zero.
struct AlgebraElement {
    std::map<Monomial, Rational, MonomialGreater> terms;
    /// Set when every monomial has the same degree (the zero element has none).
    std::optional<int> homogeneous_degree;

    bool is_zero() const { return terms.empty(); }

    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

/// What to do with monomials above a user-supplied (non-sound) cap.
/// Above a sound cap everything is provably zero and is always dropped.
enum class Truncation {
    Strict,  ///< throw TruncatedError
    Drop,    ///< drop the term; results become lower-bound certificates only
};

/// The computational heart: per-degree monomial bases and reduction tables
/// realizing the quotient of the free graded-commutative ring (all generators
/// of even degree) by the relation ideal. Immutable after build; all queries
/// are const and safe for concurrent use.
class QuotientAlgebra {
public:
    /// Builds the per-degree data by exact rational elimination. If the
    /// presentation carries max_degree that becomes the cap (not sound);
    /// otherwise every generator must be detected nilpotent within the probe
    /// limit, the cap is derived from the nilpotency orders and is sound.
    /// Throws UnboundedAlgebraError when neither holds.
    static QuotientAlgebra build(const RingPresentation& p);

    const RingPresentation& presentation() const { return presentation_; }
    const std::vector<int>& generator_degrees() const { return gen_degrees_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    std::size_t generator_count() const { return gen_degrees_.size(); }

    /// Largest materialized degree. Every query above it returns zero when the
    /// cap is sound and errors (or drops, per policy) when it is not.
    int cap() const { return cap_; }
    bool cap_sound() const { return cap_sound_; }

    /// Smallest k with g^k = 0 in the quotient; available iff the cap is sound.
    int nilpotency_order(std::size_t gen) const;

    /// Replaces every reducible monomial by its reduction row. Linear over the
    /// rationals; idempotent on already-normal input.
    AlgebraElement normal_form(const RawPoly& x, Truncation t = Truncation::Strict) const;

    /// Cup product: distribute, add exponent vectors, reduce. Commutative
    /// because every generator degree is even.
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                            Truncation t = Truncation::Strict) const;

    /// k-fold product; power(x, 0) is the unit.
    AlgebraElement power(const AlgebraElement& x, int k, Truncation t = Truncation::Strict) const;

    AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement scale(const Rational& c, const AlgebraElement& x) const;

    AlgebraElement unit() const;
    AlgebraElement generator_element(std::size_t gen, Truncation t = Truncation::Strict) const;
    AlgebraElement monomial_element(const Monomial& m, Truncation t = Truncation::Strict) const;

    /// Dimension of the degree-d graded piece.
    int graded_dimension(int d) const;

    /// Largest d with graded_dimension(d) > 0. Requires a sound cap.
    int top_degree() const;

    /// Sum of all graded dimensions. Requires a sound cap.
    int total_dimension() const;

    /// Basis monomials of degree d, greatest first.
    const std::vector<Monomial>& basis(int d) const;

    /// All monomials of degree d in the generators, greatest first.
    std::vector<Monomial> monomials_of_degree(int d) const;

    std::string element_to_string(const AlgebraElement& x) const;

private:
    explicit QuotientAlgebra(RingPresentation p);

    struct DegreePiece {
        std::vector<Monomial> monomials;  // all monomials of this degree, greatest first
        std::vector<Monomial> basis;      // non-pivot monomials, greatest first
        // every monomial of this degree -> combination of basis monomials
        std::map<Monomial, std::map<Monomial, Rational, MonomialGreater>, MonomialGreater> reduce;
    };

    void materialize_degree(int d);
    void materialize_up_to(int d);
    const DegreePiece& piece(int d) const { return pieces_.at(d); }

    RingPresentation presentation_;
    std::vector<int> gen_degrees_;
    std::vector<std::string> gen_names_;
    std::map<int, DegreePiece> pieces_;  // even degrees 0..cap (odd pieces are empty)
    std::vector<int> nilpotency_;        // per generator; filled when cap_sound_
    int cap_ = 0;
    bool cap_sound_ = false;
};

}  // namespace lstc
