#include "resfield/sampler.hpp"

namespace resfield {

std::uint64_t Sampler::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Sampler::integer(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool Sampler::chance(unsigned percent) { return next_u64() % 100 < percent; }

mpq_class Sampler::rational(long max_num, long max_den) {
    mpq_class q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

FieldElem Sampler::field(const FieldDescriptor& d) {
    switch (d.kind()) {
        case FieldKind::Rationals:
            return FieldElem::from_rational(d, rational(12, 6));
        case FieldKind::GaussianRationals:
            return FieldElem::gaussian(d, rational(9, 4), rational(9, 4));
        case FieldKind::PrimeField:
            return FieldElem::from_integer(
                d, mpz_class(static_cast<unsigned long>(next_u64() % d.modulus())));
    }
    throw Error("unreachable");
}

FieldElem Sampler::field_nonzero(const FieldDescriptor& d) {
    for (;;) {
        FieldElem e = field(d);
        if (!e.is_zero()) return e;
    }
}

Poly Sampler::poly(const FieldDescriptor& d, long max_deg) {
    std::vector<FieldElem> cs;
    long deg = integer(0, max_deg);
    for (long i = 0; i <= deg; ++i) cs.push_back(field(d));
    return Poly::from_coeffs(d, std::move(cs));
}

Poly Sampler::unit_poly(const FieldDescriptor& d, long max_deg) {
    Poly p = poly(d, max_deg);
    if (p.coeff(0).is_zero())
        p = p + Poly::constant(field_nonzero(d));
    return p;
}

SeriesElem Sampler::series(const FieldDescriptor& d, long min_val_num, long max_ram,
                           long max_deg) {
    if (chance(10)) return SeriesElem::zero(d);
    return series_nonzero(d, min_val_num, max_ram, max_deg);
}

SeriesElem Sampler::series_nonzero(const FieldDescriptor& d, long min_val_num, long max_ram,
                                   long max_deg) {
    long e = integer(1, max_ram);
    long m = integer(min_val_num * e, 3 * e);
    Poly u = unit_poly(d, max_deg);
    Poly w = chance(50) ? Poly::one(d) : unit_poly(d, max_deg);
    return SeriesElem::make(d, e, m, u, w);
}

}  // namespace resfield
