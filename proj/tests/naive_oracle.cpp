#include "naive_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace naive {

Ring make_ring(const lstc::RingPresentation& p) {
    p.validate();
    Ring ring;
    ring.presentation = p;
    ring.degrees = p.generator_degrees();
    for (const auto& r : p.relations) {
        if (r.empty()) continue;
        Poly poly;
        for (const auto& [m, c] : r.terms) poly.emplace(m, Rational(c));
        ring.relations.push_back(std::move(poly));
    }
    return ring;
}

bool divides(const Monomial& divisor, const Monomial& multiple) {
    for (std::size_t i = 0; i < divisor.exponents.size(); ++i)
        if (divisor.exponents[i] > multiple.exponents[i]) return false;
    return true;
}

Monomial quotient(const Monomial& multiple, const Monomial& divisor) {
    Monomial out = multiple;
    for (std::size_t i = 0; i < divisor.exponents.size(); ++i)
        out.exponents[i] -= divisor.exponents[i];
    return out;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b) {
        auto [it, inserted] = out.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Poly scale(const Rational& c, const Poly& a) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, v] : a) out.emplace(m, c * v);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m = lstc::monomial_product(ma, mb);
            auto [it, inserted] = out.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Poly monomial_poly(const Monomial& m) { return Poly{{m, Rational(1)}}; }

Poly normal_form(const Ring& ring, Poly x) {
    for (;;) {
        bool rewrote = false;
        // maps iterate greatest monomial first, so the first reducible
        // monomial found is the greatest one
        for (const auto& [m, c] : x) {
            for (const auto& rel : ring.relations) {
                const Monomial& lead = rel.begin()->first;
                if (!divides(lead, m)) continue;
                const Rational factor = c / rel.begin()->second;
                const Poly subtrahend =
                    scale(-factor, multiply(monomial_poly(quotient(m, lead)), rel));
                x = add(x, subtrahend);  // cancels m exactly
                rewrote = true;
                break;
            }
            if (rewrote) break;
        }
        if (!rewrote) return x;
    }
}

bool is_groebner(const Ring& ring) {
    for (std::size_t i = 0; i < ring.relations.size(); ++i) {
        for (std::size_t j = i + 1; j < ring.relations.size(); ++j) {
            const Poly& f = ring.relations[i];
            const Poly& g = ring.relations[j];
            const Monomial& lf = f.begin()->first;
            const Monomial& lg = g.begin()->first;
            Monomial lcm = lf;
            for (std::size_t k = 0; k < lcm.exponents.size(); ++k)
                lcm.exponents[k] = std::max(lf.exponents[k], lg.exponents[k]);
            const Poly s =
                add(scale(Rational(1) / f.begin()->second,
                          multiply(monomial_poly(quotient(lcm, lf)), f)),
                    scale(Rational(-1) / g.begin()->second,
                          multiply(monomial_poly(quotient(lcm, lg)), g)));
            if (!normal_form(ring, s).empty()) return false;
        }
    }
    return true;
}

namespace {

void enumerate(const Ring& ring, std::size_t gen, int remaining, Monomial& current,
               std::vector<Monomial>& out) {
    if (gen == ring.degrees.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (int e = 0; e * ring.degrees[gen] <= remaining; ++e) {
        current.exponents[gen] = static_cast<std::uint32_t>(e);
        enumerate(ring, gen + 1, remaining - e * ring.degrees[gen], current, out);
    }
    current.exponents[gen] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial current(std::vector<std::uint32_t>(ring.degrees.size(), 0));
    enumerate(ring, 0, d, current, out);
    return out;
}

int dimension(const Ring& ring, int d) {
    int count = 0;
    for (const auto& m : monomials_of_degree(ring, d)) {
        bool standard = true;
        for (const auto& rel : ring.relations)
            if (divides(rel.begin()->first, m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
    }
    return count;
}

namespace {

void search_cup(const Ring& ring, const std::vector<int>& bounds, std::size_t gen,
                Monomial& current, int& best) {
    if (gen == bounds.size()) {
        if (current.length() > best && !normal_form(ring, monomial_poly(current)).empty())
            best = current.length();
        return;
    }
    for (int e = 0; e <= bounds[gen]; ++e) {
        current.exponents[gen] = static_cast<std::uint32_t>(e);
        search_cup(ring, bounds, gen + 1, current, best);
    }
    current.exponents[gen] = 0;
}

}  // namespace

int cup_length(const Ring& ring, const std::vector<int>& exponent_bounds) {
    int best = 0;
    Monomial current(std::vector<std::uint32_t>(ring.degrees.size(), 0));
    search_cup(ring, exponent_bounds, 0, current, best);
    return best;
}

TensorPoly tensor_unit(const Ring& ring) {
    Monomial one(std::vector<std::uint32_t>(ring.degrees.size(), 0));
    return TensorPoly{{{one, one}, Rational(1)}};
}

TensorPoly zero_divisor(const Ring& ring, std::size_t gen) {
    Monomial one(std::vector<std::uint32_t>(ring.degrees.size(), 0));
    Monomial g = one;
    g.exponents[gen] = 1;
    TensorPoly out;
    out.emplace(std::make_pair(one, g), Rational(1));
    out.emplace(std::make_pair(g, one), Rational(-1));
    return out;
}

TensorPoly t_multiply(const Ring& ring, const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            const Poly left =
                normal_form(ring, monomial_poly(lstc::monomial_product(pa.first, pb.first)));
            const Poly right =
                normal_form(ring, monomial_poly(lstc::monomial_product(pa.second, pb.second)));
            for (const auto& [ml, cl] : left) {
                for (const auto& [mr, cr] : right) {
                    const Rational c = ca * cb * cl * cr;
                    auto [it, inserted] = out.emplace(std::make_pair(ml, mr), c);
                    if (!inserted) {
                        it->second += c;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
        }
    }
    return out;
}

TensorPoly t_power(const Ring& ring, const TensorPoly& a, int k) {
    TensorPoly out = tensor_unit(ring);
    for (int i = 0; i < k; ++i) out = t_multiply(ring, out, a);
    return out;
}

namespace {

void search_zcl(const Ring& ring, const std::vector<int>& bounds, std::size_t gen,
                std::vector<int>& current, int& best) {
    if (gen == bounds.size()) {
        int total = 0;
        for (int k : current) total += k;
        if (total <= best) return;
        TensorPoly product = tensor_unit(ring);
        for (std::size_t g = 0; g < current.size() && !product.empty(); ++g)
            product = t_multiply(ring, product, t_power(ring, zero_divisor(ring, g), current[g]));
        if (!product.empty()) best = total;
        return;
    }
    for (int k = 0; k <= bounds[gen]; ++k) {
        current[gen] = k;
        search_zcl(ring, bounds, gen + 1, current, best);
    }
    current[gen] = 0;
}

}  // namespace

int zcl_lower(const Ring& ring, const std::vector<int>& multiplicity_bounds) {
    int best = 0;
    std::vector<int> current(multiplicity_bounds.size(), 0);
    search_zcl(ring, multiplicity_bounds, 0, current, best);
    return best;
}

}  // namespace naive
