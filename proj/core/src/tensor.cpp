#include "lstc/tensor.hpp"

#include "lstc/errors.hpp"

namespace lstc {

namespace {

void accumulate(TensorElement& out, const Monomial& left, const Monomial& right,
                const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = out.terms.emplace(std::make_pair(left, right), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
    }
}

/// Adds c * (x (x) y) with both factors already in normal form.
void accumulate_product(TensorElement& out, const AlgebraElement& x, const AlgebraElement& y,
                        const Rational& c) {
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) accumulate(out, mx, my, c * cx * cy);
}

}  // namespace

bool is_zero(const TensorElement& x) { return x.terms.empty(); }

TensorElement tensor_unit(const QuotientAlgebra& A) {
    TensorElement out;
    Monomial one(std::vector<std::uint32_t>(A.generator_count(), 0));
    out.terms.emplace(std::make_pair(one, one), Rational(1));
    return out;
}

TensorElement zero_divisor(const QuotientAlgebra& A, std::string_view gen_name) {
    const auto idx = A.presentation().generator_index(gen_name);
    if (!idx) throw UnknownGeneratorError(std::string(gen_name));
    const AlgebraElement g = A.generator_element(*idx, Truncation::Drop);
    const AlgebraElement one = A.unit();
    TensorElement out;
    accumulate_product(out, one, g, Rational(1));
    accumulate_product(out, g, one, Rational(-1));
    return out;
}

TensorElement tensor_of(const QuotientAlgebra& A, const AlgebraElement& x,
                        const AlgebraElement& y) {
    (void)A;
    TensorElement out;
    accumulate_product(out, x, y, Rational(1));
    return out;
}

TensorElement make_tensor(const QuotientAlgebra& A,
                          const std::vector<std::tuple<Monomial, Monomial, Rational>>& raw,
                          Truncation t) {
    TensorElement out;
    for (const auto& [l, r, c] : raw) {
        const AlgebraElement left = A.monomial_element(l, t);
        const AlgebraElement right = A.monomial_element(r, t);
        accumulate_product(out, left, right, c);
    }
    return out;
}

TensorElement t_multiply(const QuotientAlgebra& A, const TensorElement& x, const TensorElement& y,
                         Truncation t) {
    // Any component degree above the materialized range makes the term zero
    // (sound cap) or droppable (Drop policy), so prune before reducing.
    const auto& degrees = A.generator_degrees();
    TensorElement out;
    for (const auto& [px, cx] : x.terms) {
        const int dx1 = degree_of(px.first, degrees);
        const int dx2 = degree_of(px.second, degrees);
        for (const auto& [py, cy] : y.terms) {
            const int d1 = dx1 + degree_of(py.first, degrees);
            const int d2 = dx2 + degree_of(py.second, degrees);
            if (d1 > A.cap() || d2 > A.cap()) {
                if (A.cap_sound() || t == Truncation::Drop) continue;
                throw TruncatedError("tensor component degree exceeds the user-supplied cap");
            }
            const AlgebraElement left =
                A.monomial_element(monomial_product(px.first, py.first), t);
            if (left.is_zero()) continue;
            const AlgebraElement right =
                A.monomial_element(monomial_product(px.second, py.second), t);
            accumulate_product(out, left, right, cx * cy);
        }
    }
    return out;
}

TensorElement t_power(const QuotientAlgebra& A, const TensorElement& x, int k, Truncation t) {
    if (k < 0) throw InvalidParameterError("t_power requires k >= 0");
    TensorElement out = tensor_unit(A);
    for (int i = 0; i < k; ++i) {
        out = t_multiply(A, out, x, t);
        if (out.is_zero()) break;
    }
    return out;
}

TensorElement t_add(const QuotientAlgebra& A, const TensorElement& x, const TensorElement& y) {
    (void)A;
    TensorElement out = x;
    for (const auto& [p, c] : y.terms) accumulate(out, p.first, p.second, c);
    return out;
}

TensorElement t_subtract(const QuotientAlgebra& A, const TensorElement& x,
                         const TensorElement& y) {
    (void)A;
    TensorElement out = x;
    for (const auto& [p, c] : y.terms) accumulate(out, p.first, p.second, -c);
    return out;
}

std::string tensor_to_string(const QuotientAlgebra& A, const TensorElement& x) {
    if (x.terms.empty()) return "0";
    const auto& names = A.generator_names();
    std::string out;
    bool first = true;
    for (const auto& [p, c] : x.terms) {
        const Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += a.get_str() + "*";
        out += "(" + monomial_to_string(p.first, names) + " (x) " +
               monomial_to_string(p.second, names) + ")";
    }
    return out;
}

}  // namespace lstc
