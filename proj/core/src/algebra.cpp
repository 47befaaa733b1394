#include "lstc/algebra.hpp"

#include <algorithm>
#include <cassert>

#include "lstc/errors.hpp"

namespace lstc {

namespace {

/// Enumerates all exponent vectors of exact degree d, greatest monomial
/// first. Earlier generators are lex-dominant, so iterating the first
/// exponent from high to low yields descending order directly.
void enumerate_rec(const std::vector<int>& degrees, std::size_t gen, int remaining,
                   std::vector<std::uint32_t>& current, std::vector<Monomial>& out) {
    if (gen + 1 == degrees.size()) {
        if (remaining % degrees[gen] == 0) {
            current[gen] = static_cast<std::uint32_t>(remaining / degrees[gen]);
            out.emplace_back(current);
        }
        return;
    }
    for (int e = remaining / degrees[gen]; e >= 0; --e) {
        current[gen] = static_cast<std::uint32_t>(e);
        enumerate_rec(degrees, gen + 1, remaining - e * degrees[gen], current, out);
    }
    current[gen] = 0;
}

std::vector<Monomial> enumerate_monomials(const std::vector<int>& degrees, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (degrees.empty()) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> current(degrees.size(), 0);
    enumerate_rec(degrees, 0, d, current, out);
    return out;
}

/// In-place reduced row echelon form over the rationals. Returns the pivot
/// column of each surviving row, in increasing order.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows.size()) continue;
        std::swap(rows[row], rows[pivot_row]);
        const Rational inv = 1 / rows[row][col];
        for (std::size_t j = col; j < cols; ++j) rows[row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(row);
    return pivots;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

QuotientAlgebra::QuotientAlgebra(RingPresentation p)
    : presentation_(std::move(p)),
      gen_degrees_(presentation_.generator_degrees()),
      gen_names_(presentation_.generator_names()) {}

void QuotientAlgebra::materialize_degree(int d) {
    if (pieces_.count(d)) return;
    DegreePiece piece;
    piece.monomials = enumerate_monomials(gen_degrees_, d);

    const std::size_t cols = piece.monomials.size();
    std::map<Monomial, std::size_t, MonomialGreater> column;
    for (std::size_t j = 0; j < cols; ++j) column.emplace(piece.monomials[j], j);

    // Rows: every product m * r of a relation r with a monomial m such that
    // deg(m * r) = d. Their span is the degree-d piece of the ideal.
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : presentation_.relations) {
        if (r.empty()) continue;
        const int rd = r.degree(gen_degrees_);
        if (rd > d) continue;
        for (const auto& m : enumerate_monomials(gen_degrees_, d - rd)) {
            std::vector<Rational> row(cols, Rational(0));
            for (const auto& [t, c] : r.terms) row[column.at(monomial_product(m, t))] += c;
            rows.push_back(std::move(row));
        }
    }

    const auto pivots = rref(rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) piece.basis.push_back(piece.monomials[j]);

    // Basis monomials reduce to themselves; each pivot row "m + sum c_j b_j = 0"
    // yields the reduction m -> -sum c_j b_j over basis monomials only.
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) piece.reduce[piece.monomials[j]] = {{piece.monomials[j], Rational(1)}};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::map<Monomial, Rational, MonomialGreater> combo;
        for (std::size_t j = pivots[i] + 1; j < cols; ++j) {
            if (is_pivot[j] || rows[i][j] == 0) continue;
            combo.emplace(piece.monomials[j], -rows[i][j]);
        }
        piece.reduce[piece.monomials[pivots[i]]] = std::move(combo);
    }

    pieces_.emplace(d, std::move(piece));
}

void QuotientAlgebra::materialize_up_to(int d) {
    for (int k = 0; k <= d; k += 2) materialize_degree(k);
}

QuotientAlgebra QuotientAlgebra::build(const RingPresentation& p) {
    p.validate();
    QuotientAlgebra A(p);

    if (p.max_degree) {
        A.cap_ = *p.max_degree;
        A.cap_sound_ = false;
        A.materialize_up_to(A.cap_);
        return A;
    }

    // Nilpotency probe: find the smallest k with g^k = 0 for every generator,
    // scanning degrees upward and giving up at 2*(1 + ceil(maxreldeg/deg g))
    // powers. The probe cap sum_g (k_g - 1) deg(g) dominates the top degree:
    // any monomial above it contains some g^{k_g} and reduces to zero.
    int max_rel_degree = 0;
    for (const auto& r : p.relations)
        if (!r.empty()) max_rel_degree = std::max(max_rel_degree, r.degree(A.gen_degrees_));

    const std::size_t n_gens = A.gen_degrees_.size();
    std::vector<int> probe_limit(n_gens), order(n_gens, 0);
    for (std::size_t g = 0; g < n_gens; ++g)
        probe_limit[g] = 2 * (1 + ceil_div(max_rel_degree, A.gen_degrees_[g]));

    int max_probe = 0;
    for (std::size_t g = 0; g < n_gens; ++g) max_probe = std::max(max_probe, probe_limit[g]);

    std::size_t found = 0;
    for (int k = 1; k <= max_probe && found < n_gens; ++k) {
        for (std::size_t g = 0; g < n_gens; ++g) {
            if (order[g] != 0 || k > probe_limit[g]) continue;
            const int d = k * A.gen_degrees_[g];
            A.materialize_degree(d);
            Monomial power(std::vector<std::uint32_t>(n_gens, 0));
            power.exponents[g] = static_cast<std::uint32_t>(k);
            if (A.pieces_.at(d).reduce.at(power).empty()) {
                order[g] = k;
                ++found;
            }
        }
    }
    if (found < n_gens) {
        std::string missing;
        for (std::size_t g = 0; g < n_gens; ++g)
            if (order[g] == 0) missing += (missing.empty() ? "" : ", ") + A.gen_names_[g];
        throw UnboundedAlgebraError(
            "no max_degree given and generator(s) not provably nilpotent: " + missing);
    }

    int cap = 0;
    for (std::size_t g = 0; g < n_gens; ++g) cap += (order[g] - 1) * A.gen_degrees_[g];
    A.cap_ = cap;
    A.cap_sound_ = true;
    A.nilpotency_ = std::move(order);
    A.materialize_up_to(cap);
    // the probe may have looked past the cap; those pieces are all zero
    A.pieces_.erase(A.pieces_.upper_bound(cap), A.pieces_.end());
    return A;
}

int QuotientAlgebra::nilpotency_order(std::size_t gen) const {
    if (!cap_sound_)
        throw TruncatedError("nilpotency orders are unavailable for a user-capped algebra");
    return nilpotency_.at(gen);
}

AlgebraElement QuotientAlgebra::normal_form(const RawPoly& x, Truncation t) const {
    AlgebraElement out;
    for (const auto& [m, c] : x) {
        if (c == 0) continue;
        if (m.exponents.size() != gen_degrees_.size())
            throw InvalidParameterError("monomial arity does not match the generator count");
        const int d = degree_of(m, gen_degrees_);
        if (d > cap_) {
            if (cap_sound_ || t == Truncation::Drop) continue;  // provably or policy zero
            throw TruncatedError("monomial of degree " + std::to_string(d) +
                                 " exceeds the user-supplied cap " + std::to_string(cap_));
        }
        if (d % 2 != 0) continue;  // no odd monomials exist for even generators
        for (const auto& [b, r] : piece(d).reduce.at(m)) {
            auto [it, inserted] = out.terms.emplace(b, c * r);
            if (!inserted) {
                it->second += c * r;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    std::optional<int> deg;
    bool homogeneous = true;
    for (const auto& [m, c] : out.terms) {
        const int d = degree_of(m, gen_degrees_);
        if (!deg)
            deg = d;
        else if (*deg != d)
            homogeneous = false;
    }
    if (homogeneous && deg) out.homogeneous_degree = deg;
    return out;
}

AlgebraElement QuotientAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y,
                                         Truncation t) const {
    RawPoly raw;
    for (const auto& [mx, cx] : x.terms) {
        for (const auto& [my, cy] : y.terms) {
            Monomial m = monomial_product(mx, my);
            auto [it, inserted] = raw.emplace(std::move(m), cx * cy);
            if (!inserted) it->second += cx * cy;
        }
    }
    return normal_form(raw, t);
}

AlgebraElement QuotientAlgebra::power(const AlgebraElement& x, int k, Truncation t) const {
    if (k < 0) throw InvalidParameterError("power requires k >= 0");
    AlgebraElement out = unit();
    for (int i = 0; i < k; ++i) {
        out = multiply(out, x, t);
        if (out.is_zero()) break;
    }
    return out;
}

AlgebraElement QuotientAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
    RawPoly raw(x.terms.begin(), x.terms.end());
    for (const auto& [m, c] : y.terms) {
        auto [it, inserted] = raw.emplace(m, c);
        if (!inserted) it->second += c;
    }
    return normal_form(raw, Truncation::Drop);
}

AlgebraElement QuotientAlgebra::subtract(const AlgebraElement& x, const AlgebraElement& y) const {
    return add(x, scale(Rational(-1), y));
}

AlgebraElement QuotientAlgebra::scale(const Rational& c, const AlgebraElement& x) const {
    AlgebraElement out;
    if (c == 0) return out;
    for (const auto& [m, v] : x.terms) out.terms.emplace(m, c * v);
    out.homogeneous_degree = x.homogeneous_degree;
    return out;
}

AlgebraElement QuotientAlgebra::unit() const {
    AlgebraElement out;
    out.terms.emplace(Monomial(std::vector<std::uint32_t>(gen_degrees_.size(), 0)), Rational(1));
    out.homogeneous_degree = 0;
    return out;
}

AlgebraElement QuotientAlgebra::generator_element(std::size_t gen, Truncation t) const {
    if (gen >= gen_degrees_.size()) throw UnknownGeneratorError("generator #" + std::to_string(gen));
    Monomial m(std::vector<std::uint32_t>(gen_degrees_.size(), 0));
    m.exponents[gen] = 1;
    return monomial_element(m, t);
}

AlgebraElement QuotientAlgebra::monomial_element(const Monomial& m, Truncation t) const {
    RawPoly raw;
    raw.emplace(m, Rational(1));
    return normal_form(raw, t);
}

int QuotientAlgebra::graded_dimension(int d) const {
    if (d < 0) throw InvalidParameterError("graded_dimension requires d >= 0");
    if (d > cap_) {
        if (cap_sound_) return 0;
        throw TruncatedError("degree " + std::to_string(d) + " exceeds the user-supplied cap");
    }
    if (d % 2 != 0) return 0;
    return static_cast<int>(piece(d).basis.size());
}

int QuotientAlgebra::top_degree() const {
    if (!cap_sound_) throw TruncatedError("top_degree requires a sound cap");
    for (int d = cap_ - cap_ % 2; d >= 0; d -= 2)
        if (!piece(d).basis.empty()) return d;
    return 0;
}

int QuotientAlgebra::total_dimension() const {
    if (!cap_sound_) throw TruncatedError("total_dimension requires a sound cap");
    int total = 0;
    for (const auto& [d, piece] : pieces_) total += static_cast<int>(piece.basis.size());
    return total;
}

const std::vector<Monomial>& QuotientAlgebra::basis(int d) const {
    static const std::vector<Monomial> empty;
    if (d < 0 || d % 2 != 0) return empty;
    if (d > cap_) {
        if (cap_sound_) return empty;
        throw TruncatedError("degree " + std::to_string(d) + " exceeds the user-supplied cap");
    }
    return piece(d).basis;
}

std::vector<Monomial> QuotientAlgebra::monomials_of_degree(int d) const {
    return enumerate_monomials(gen_degrees_, d);
}

std::string QuotientAlgebra::element_to_string(const AlgebraElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
        const Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::string mono = monomial_to_string(m, gen_names_);
        if (a != 1 || mono == "1") {
            out += a.get_str();
            if (mono != "1") out += "*";
        }
        if (mono != "1") out += mono;
    }
    return out;
}

}  // namespace lstc
