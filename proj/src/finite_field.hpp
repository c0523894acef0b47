#ifndef X3P_FINITE_FIELD_HPP
#define X3P_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace x3p {

class Field;

// Element of GF(p^e), stored as e coefficients in [0,p), constant term first.
// Carries a pointer to its field; operations between elements of different
// fields throw errc::mixed_fields. The field must outlive its elements.
class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(const Field* field, std::vector<uint64_t> coeffs)
        : coeffs_(std::move(coeffs)), field_(field) {}

    const std::vector<uint64_t>& coeffs() const { return coeffs_; }
    const Field* field() const { return field_; }
    uint64_t index() const; // integer encoding sum c_i * p^i
    bool is_zero() const;

    FieldElement pow(uint64_t n) const;

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend bool operator==(const FieldElement&, const FieldElement&);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    std::vector<uint64_t> coeffs_;
    const Field* field_;
};

// GF(p^e) with p prime and p^e <= 2^31. The modulus is the monic irreducible
// polynomial of degree e whose non-leading coefficients form the smallest
// integer encoding sum c_i * p^i, so field construction is deterministic.
class Field {
public:
    Field(uint64_t p, uint64_t e); // throws non_prime / order_too_large

    uint64_t p() const { return p_; }
    uint64_t degree() const { return e_; }
    uint64_t order() const { return q_; }
    // modulus coefficients, constant first, length e+1, leading coefficient 1
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    // element with integer encoding k, 0 <= k < order
    FieldElement element(uint64_t k) const;

    // first element in integer-encoding order whose multiplicative order is q-1
    FieldElement primitive_element() const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    uint64_t p_, e_, q_;
    std::vector<uint64_t> modulus_;
};

Field build_field(uint64_t p, uint64_t e);

// Frobenius membership test: x lies in the subfield of order q iff x^q == x.
// q must satisfy q^2 == order of the ambient field, else bad_subfield_order.
bool in_subfield(const FieldElement& x, uint64_t q);

} // namespace x3p

#endif
