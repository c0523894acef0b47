#include "finite_field.hpp"

#include <algorithm>

namespace x3p {

namespace {

using Poly = std::vector<uint64_t>; // coefficients mod p, constant first

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// reduce in place by a monic modulus of degree e (mod has e+1 coefficients)
void reduce(Poly& a, const Poly& mod, uint64_t p) {
    const size_t e = mod.size() - 1;
    for (size_t i = a.size(); i-- > e;) {
        uint64_t c = a[i];
        if (c == 0) continue;
        for (size_t j = 0; j <= e; ++j) {
            uint64_t& slot = a[i - e + j];
            slot = (slot + (p - mod[j] % p) * c) % p;
        }
    }
    if (a.size() > e) a.resize(e);
    a.resize(e, 0);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
    Poly res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            res[i + j] = (res[i + j] + a[i] * b[j]) % p;
    }
    reduce(res, mod, p);
    return res;
}

Poly powmod(Poly base, uint64_t n, const Poly& mod, uint64_t p) {
    Poly result(mod.size() - 1, 0);
    result[0] = 1;
    while (n) {
        if (n & 1) result = mulmod(result, base, mod, p);
        base = mulmod(base, base, mod, p);
        n >>= 1;
    }
    return result;
}

uint64_t inv_mod_p(uint64_t a, uint64_t p) {
    // p prime, a != 0
    uint64_t r = 1, b = a % p, n = p - 2;
    while (n) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t inv = inv_mod_p(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = a.back() * inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - b[i] % p) * c) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// a monic polynomial of degree e >= 2 is irreducible iff it shares no factor
// with x^(p^d) - x for any d <= e/2
bool is_irreducible(const Poly& f, uint64_t p) {
    const size_t e = f.size() - 1;
    Poly r = {0, 1}; // x
    for (size_t d = 1; d <= e / 2; ++d) {
        r = powmod(r, p, f, p);
        Poly diff = r;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        Poly g = poly_gcd(diff, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<uint64_t> factor_primes(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

Field::Field(uint64_t p, uint64_t e) : p_(p), e_(e) {
    if (!is_prime(p)) fail(errc::non_prime, "field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) fail(errc::invalid_argument, "field degree must be positive");
    unsigned __int128 q = 1;
    for (uint64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (uint64_t(1) << 31)) fail(errc::order_too_large, "field order exceeds 2^31");
    }
    q_ = uint64_t(q);

    if (e == 1) {
        modulus_ = {0, 1}; // x
        return;
    }
    for (uint64_t k = 0;; ++k) {
        Poly f(e + 1, 0);
        uint64_t kk = k;
        for (uint64_t i = 0; i < e; ++i) {
            f[i] = kk % p;
            kk /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            return;
        }
        if (k == q_ - 1) fail(errc::internal, "no irreducible polynomial found");
    }
}

Field build_field(uint64_t p, uint64_t e) { return Field(p, e); }

FieldElement Field::zero() const { return FieldElement(this, std::vector<uint64_t>(e_, 0)); }

FieldElement Field::one() const {
    std::vector<uint64_t> c(e_, 0);
    c[0] = 1;
    return FieldElement(this, c);
}

FieldElement Field::element(uint64_t k) const {
    if (k >= q_) fail(errc::invalid_argument, "element index out of range");
    std::vector<uint64_t> c(e_, 0);
    for (uint64_t i = 0; i < e_; ++i) {
        c[i] = k % p_;
        k /= p_;
    }
    return FieldElement(this, c);
}

FieldElement Field::primitive_element() const {
    const uint64_t n = q_ - 1;
    const auto primes = factor_primes(n);
    for (uint64_t k = 1; k < q_; ++k) {
        FieldElement g = element(k);
        bool ok = true;
        for (uint64_t f : primes) {
            if (g.pow(n / f) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    fail(errc::internal, "no primitive element found");
}

uint64_t FieldElement::index() const {
    uint64_t k = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) k = k * field_->p() + coeffs_[i];
    return k;
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint64_t c) { return c == 0; });
}

namespace {
const Field* require_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) fail(errc::invalid_argument, "uninitialized field element");
    if (!a.field()->same_as(*b.field()))
        fail(errc::mixed_fields, "operands belong to different fields");
    return a.field();
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field* f = require_same(a, b);
    std::vector<uint64_t> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % f->p();
    return FieldElement(a.field(), c);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field* f = require_same(a, b);
    std::vector<uint64_t> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + f->p() - b.coeffs()[i]) % f->p();
    return FieldElement(a.field(), c);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field* f = require_same(a, b);
    return FieldElement(a.field(), mulmod(a.coeffs(), b.coeffs(), f->modulus(), f->p()));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a.coeffs() == b.coeffs();
}

FieldElement FieldElement::pow(uint64_t n) const {
    if (!field_) fail(errc::invalid_argument, "uninitialized field element");
    return FieldElement(field_, powmod(coeffs_, n, field_->modulus(), field_->p()));
}

bool in_subfield(const FieldElement& x, uint64_t q) {
    if (!x.field()) fail(errc::invalid_argument, "uninitialized field element");
    if (q < 2 || q > (uint64_t(1) << 31) || q * q != x.field()->order())
        fail(errc::bad_subfield_order, "subfield order " + std::to_string(q) +
                                           " does not square to the ambient order");
    return x.pow(q) == x;
}

} // namespace x3p
