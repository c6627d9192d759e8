#include <algorithm>
#include <set>
#include <vector>

#include "resfield/poly.hpp"

namespace resfield {

namespace {

// Trial-division factorization of n > 0; complete (any cofactor left after
// dividing out everything up to sqrt(n) is prime).
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> fs;
    if (n <= 1) return fs;
    unsigned e = 0;
    while (mpz_even_p(n.get_mpz_t())) {
        n /= 2;
        ++e;
    }
    if (e) fs.emplace_back(2, e);
    mpz_class f = 3;
    while (f * f <= n) {
        if (n % f == 0) {
            e = 0;
            do {
                n /= f;
                ++e;
            } while (n % f == 0);
            fs.emplace_back(f, e);
        }
        f += 2;
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : factorize(abs(n))) {
        std::size_t sz = ds.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

struct CmpQ {
    bool operator()(const mpq_class& a, const mpq_class& b) const { return a < b; }
};

// ---- Gaussian integers -------------------------------------------------

struct GInt {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

GInt gmul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

mpz_class gnorm(const GInt& a) { return a.re * a.re + a.im * a.im; }

mpz_class round_div(const mpz_class& p, const mpz_class& q) {
    // nearest integer to p/q, q > 0
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * p + q).get_mpz_t(), mpz_class(2 * q).get_mpz_t());
    return r;
}

GInt gdiv_round(const GInt& a, const GInt& b) {
    mpz_class n = gnorm(b);
    GInt num = gmul(a, GInt{b.re, -b.im});
    return {round_div(num.re, n), round_div(num.im, n)};
}

bool gdivides(const GInt& d, const GInt& a) {
    if (d.is_zero()) return a.is_zero();
    mpz_class n = gnorm(d);
    GInt num = gmul(a, GInt{d.re, -d.im});
    return num.re % n == 0 && num.im % n == 0;
}

GInt ggcd(GInt a, GInt b) {
    while (!b.is_zero()) {
        GInt q = gdiv_round(a, b);
        GInt r = gsub(a, gmul(q, b));
        a = b;
        b = r;
    }
    return a;
}

// All Gaussian-integer divisors of a (with all unit multiples), found by
// enumerating lattice points of every norm dividing N(a). Only norms up to
// sqrt(N(a)) are scanned; the complementary divisors come in as cofactors.
std::vector<GInt> gaussian_divisors(const GInt& a) {
    std::vector<GInt> out;
    mpz_class n = gnorm(a);
    for (const mpz_class& d : divisors(n)) {
        if (d * d > n) continue;
        mpz_class x = 0;
        while (x * x * 2 <= d) {
            mpz_class y2 = d - x * x;
            if (mpz_perfect_square_p(y2.get_mpz_t())) {
                mpz_class y;
                mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
                GInt cands[] = {{x, y}, {x, -y}, {-x, y}, {-x, -y},
                                {y, x}, {y, -x}, {-y, x}, {-y, -x}};
                for (const GInt& z : cands) {
                    if (z.is_zero()) continue;
                    if (gdivides(z, a)) {
                        out.push_back(z);
                        // the exact cofactor a / z
                        mpz_class nz = gnorm(z);
                        GInt num = gmul(a, GInt{z.re, -z.im});
                        out.push_back(GInt{num.re / nz, num.im / nz});
                    }
                }
            }
            ++x;
        }
    }
    return out;
}

// ---- per-descriptor root searches --------------------------------------

void push_root(std::vector<FieldElem>& roots, const FieldElem& r) { roots.push_back(r); }

void rational_roots(const Poly& f, std::vector<FieldElem>& roots) {
    const FieldDescriptor& d = f.descriptor();
    // clear denominators, then primitive part
    mpz_class scale = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> zc;
    zc.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rational() * scale;
        zc.push_back(v.get_num());
    }
    mpz_class content = 0;
    for (const auto& z : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content > 1)
        for (auto& z : zc) z /= content;

    const mpz_class& a0 = zc.front();
    const mpz_class& an = zc.back();
    std::set<mpq_class, CmpQ> seen;
    for (const mpz_class& w : divisors(an)) {
        for (const mpz_class& u : divisors(a0)) {
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign ? -u : u, w);
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                FieldElem y = FieldElem::from_rational(d, cand);
                if (f.eval(y).is_zero()) push_root(roots, y);
            }
        }
    }
}

void gaussian_roots(const Poly& f, std::vector<FieldElem>& roots) {
    const FieldDescriptor& d = f.descriptor();
    mpz_class scale = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.gauss_re().get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.gauss_im().get_den_mpz_t());
    }
    std::vector<GInt> zc;
    zc.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpq_class re = c.gauss_re() * scale;
        mpq_class im = c.gauss_im() * scale;
        zc.push_back(GInt{re.get_num(), im.get_num()});
    }
    GInt content{0, 0};
    for (const auto& z : zc) content = ggcd(content, z);
    if (gnorm(content) > 1)
        for (auto& z : zc) {
            GInt q = gdiv_round(z, content);
            z = q;  // exact by construction
        }

    std::set<std::pair<mpq_class, mpq_class>> seen;
    for (const GInt& w : gaussian_divisors(zc.back())) {
        mpz_class nw = gnorm(w);
        for (const GInt& u : gaussian_divisors(zc.front())) {
            GInt num = gmul(u, GInt{w.re, -w.im});
            mpq_class re(num.re, nw), im(num.im, nw);
            re.canonicalize();
            im.canonicalize();
            if (!seen.insert({re, im}).second) continue;
            FieldElem y = FieldElem::gaussian(d, re, im);
            if (f.eval(y).is_zero()) push_root(roots, y);
        }
    }
}

}  // namespace

RootsInK poly_roots_in_k(const Poly& f) {
    RootsInK out;
    if (f.is_zero()) {
        out.all_of_k = true;
        return out;
    }
    const FieldDescriptor& d = f.descriptor();

    if (d.kind() == FieldKind::PrimeField) {
        FieldEnumeration en(d);
        while (!en.done()) {
            FieldElem y = en.next();
            if (f.eval(y).is_zero()) out.roots.push_back(y);
        }
        return out;
    }

    // strip X^k (0 is a root when k > 0), then reduce to square-free part
    Poly g = f;
    std::size_t ord = *g.order();
    if (ord > 0) {
        out.roots.push_back(FieldElem::zero(d));
        g = g.shift_down(ord);
    }
    if (g.is_constant()) {
        std::sort(out.roots.begin(), out.roots.end(), FieldElem::canonical_less);
        return out;
    }
    Poly sq = Poly::gcd(g, g.derivative());
    if (!sq.is_constant()) g = Poly::divrem(g, sq).first;

    if (d.kind() == FieldKind::Rationals)
        rational_roots(g, out.roots);
    else
        gaussian_roots(g, out.roots);

    std::sort(out.roots.begin(), out.roots.end(), FieldElem::canonical_less);
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace resfield
