#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grasscode/common.hpp"

namespace grasscode {

// Arithmetic in F_q, q = p^e <= 2^20. Elements are encoded as integers in
// [0, q): the base-p digits of the code, little-endian, are the coefficients
// of the polynomial representation. The reduction polynomial is the monic
// irreducible of degree e over F_p with the smallest integer code, so every
// field is bit-reproducible.
class Field {
public:
    explicit Field(uint32_t q);
    Field(uint32_t p, uint32_t e);

    uint32_t q() const { return impl_->q; }
    uint32_t p() const { return impl_->p; }
    uint32_t degree() const { return impl_->e; }

    // Monic reduction polynomial, coefficient codes little-endian,
    // length e+1. Empty for prime fields.
    const std::vector<uint32_t>& reduction_poly() const { return impl_->poly; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    bool operator==(const Field& other) const { return impl_->q == other.impl_->q; }

private:
    struct Impl {
        uint32_t q = 0, p = 0, e = 0;
        std::vector<uint32_t> poly;
        std::vector<uint32_t> mul_table;
        std::vector<uint32_t> inv_table;
    };
    std::shared_ptr<const Impl> impl_;

    uint32_t mul_slow(uint32_t a, uint32_t b) const;
};

// F_{q^m} on top of a base field, with the Frobenius map a -> a^q and
// conversion between elements and coefficient vectors over the base field.
// Element codes are integers in [0, q^m): base-q digits, little-endian,
// are base-field element codes.
class ExtField {
public:
    ExtField(Field base, uint32_t m);

    const Field& base() const { return base_; }
    uint32_t m() const { return m_; }
    uint32_t size() const { return qm_; }

    // The polynomial generator x; {1, x, ..., x^{m-1}} is the fixed basis.
    uint32_t generator() const;

    // Monic reduction polynomial over the base field, length m+1.
    const std::vector<uint32_t>& reduction_poly() const { return poly_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    uint32_t frobenius(uint32_t a) const;

    std::vector<uint32_t> to_vector(uint32_t a) const;
    uint32_t from_vector(const std::vector<uint32_t>& coeffs) const;

private:
    Field base_;
    uint32_t m_;
    uint32_t qm_;
    std::vector<uint32_t> poly_;
    std::vector<std::vector<uint32_t>> xfold_;
    std::vector<uint32_t> frob_basis_;

    uint32_t scalar_mul(uint32_t c, uint32_t a) const;
};

} // namespace grasscode
