#ifndef RESFIELD_SAMPLER_HPP
#define RESFIELD_SAMPLER_HPP

#include <cstdint>

#include "resfield/field.hpp"
#include "resfield/poly.hpp"
#include "resfield/series.hpp"

namespace resfield {

/// Deterministic generator of random exact values (splitmix64 underneath).
/// Used by the randomized property suites and by field_sample.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in [lo, hi].
    long integer(long lo, long hi);
    bool chance(unsigned percent);

    mpq_class rational(long max_num = 16, long max_den = 8);
    FieldElem field(const FieldDescriptor& d);
    FieldElem field_nonzero(const FieldDescriptor& d);

    /// Random polynomial of degree <= max_deg (possibly zero).
    Poly poly(const FieldDescriptor& d, long max_deg);
    /// Random polynomial with nonzero constant term, degree <= max_deg.
    Poly unit_poly(const FieldDescriptor& d, long max_deg);

    /// Random series with valuation >= min_val: a rational function
    /// t^(m/e) u/w with random units, e in [1, max_ram].
    SeriesElem series(const FieldDescriptor& d, long min_val_num, long max_ram = 3,
                      long max_deg = 4);
    SeriesElem series_nonzero(const FieldDescriptor& d, long min_val_num, long max_ram = 3,
                              long max_deg = 4);

private:
    std::uint64_t state_;
};

}  // namespace resfield

#endif
