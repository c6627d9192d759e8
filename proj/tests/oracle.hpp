// Test-only brute-force oracle for series expansion. Computes coefficients
// by truncated polynomial geometric sums, a deliberately different route
// from the library's linear recurrence: 1/w = (1/w0) sum_j g^j with
// g = 1 - w/w0, truncating every product.
#ifndef RESFIELD_TESTS_ORACLE_HPP
#define RESFIELD_TESTS_ORACLE_HPP

#include <utility>
#include <vector>

#include "resfield/series.hpp"

namespace resfield::testing {

inline Poly truncate(const Poly& p, std::size_t n) {
    std::vector<FieldElem> cs;
    for (std::size_t i = 0; i <= n && i < p.coeffs().size(); ++i) cs.push_back(p.coeffs()[i]);
    return Poly::from_coeffs(p.descriptor(), std::move(cs));
}

// h_0..h_n of unit_num/unit_den as a power series in s.
inline std::vector<FieldElem> oracle_unit_coeffs(const SeriesElem& a, std::size_t n) {
    const FieldDescriptor& d = a.descriptor();
    const Poly& u = a.unit_num();
    const Poly& w = a.unit_den();
    FieldElem w0 = w.coeff(0);
    FieldElem w0inv = w0.inv();
    Poly g = Poly::one(d) - truncate(w * w0inv, n);  // order >= 1
    Poly inv = Poly::one(d);
    Poly gpow = Poly::one(d);
    for (std::size_t j = 1; j <= n; ++j) {
        gpow = truncate(gpow * g, n);
        if (gpow.is_zero()) break;
        inv = inv + gpow;
    }
    Poly h = truncate(truncate(u * inv, n) * w0inv, n);
    std::vector<FieldElem> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out.push_back(h.coeff(i));
    return out;
}

inline FieldElem oracle_coeff_at(const SeriesElem& a, const mpq_class& q) {
    const FieldDescriptor& d = a.descriptor();
    if (a.is_zero()) return FieldElem::zero(d);
    mpq_class idx = q * static_cast<long>(a.ram()) - static_cast<long>(a.shift());
    idx.canonicalize();
    if (idx.get_den() != 1 || idx < 0) return FieldElem::zero(d);
    std::size_t n = idx.get_num().get_ui();
    return oracle_unit_coeffs(a, n)[n];
}

inline FieldElem oracle_total_res(const SeriesElem& a) {
    return oracle_coeff_at(a, mpq_class(0));
}

inline std::vector<std::pair<mpq_class, FieldElem>> oracle_expansion(const SeriesElem& a,
                                                                     const mpq_class& up_to) {
    std::vector<std::pair<mpq_class, FieldElem>> out;
    if (a.is_zero()) return out;
    mpq_class idx = up_to * static_cast<long>(a.ram()) - static_cast<long>(a.shift());
    mpz_class n_end;
    mpz_fdiv_q(n_end.get_mpz_t(), idx.get_num_mpz_t(), idx.get_den_mpz_t());
    if (n_end < 0) return out;
    std::size_t n = n_end.get_ui();
    std::vector<FieldElem> h = oracle_unit_coeffs(a, n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (h[i].is_zero()) continue;
        mpq_class q(static_cast<long>(a.shift() + static_cast<long long>(i)),
                    static_cast<long>(a.ram()));
        q.canonicalize();
        out.emplace_back(q, h[i]);
    }
    return out;
}

}  // namespace resfield::testing

#endif
