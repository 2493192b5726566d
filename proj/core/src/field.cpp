#include "grasscode/field.hpp"

#include <algorithm>

namespace grasscode {
namespace {

constexpr uint32_t kMaxQ = 1u << 20;

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> digits_of(uint32_t code, uint32_t radix, uint32_t len) {
    std::vector<uint32_t> out(len);
    for (uint32_t i = 0; i < len; ++i) {
        out[i] = code % radix;
        code /= radix;
    }
    return out;
}

uint32_t code_of(const std::vector<uint32_t>& digits, uint32_t radix) {
    uint32_t code = 0;
    for (size_t i = digits.size(); i-- > 0;)
        code = code * radix + digits[i];
    return code;
}

// Remainder of a polynomial (coefficients over F, ascending degree) modulo a
// monic divisor. Both inputs may carry leading zeros.
std::vector<uint32_t> poly_mod(std::vector<uint32_t> rem,
                               const std::vector<uint32_t>& div,
                               const Field& F) {
    size_t d = div.size();
    while (d > 0 && div[d - 1] == 0) --d;
    require(d >= 1, "poly_mod: zero divisor");
    size_t deg = d - 1;
    for (size_t i = rem.size(); i-- > deg;) {
        if (i + 1 > rem.size() || rem[i] == 0) continue;
        uint32_t c = rem[i];
        rem[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            rem[i - deg + j] = F.sub(rem[i - deg + j], F.mul(c, div[j]));
    }
    rem.resize(deg);
    return rem;
}

bool poly_is_zero(const std::vector<uint32_t>& p) {
    return std::all_of(p.begin(), p.end(), [](uint32_t c) { return c == 0; });
}

// A monic polynomial of degree >= 1 is irreducible iff no monic polynomial of
// degree in [1, deg/2] divides it. Candidate divisors are enumerated by the
// integer code of their low coefficients.
bool poly_irreducible(const std::vector<uint32_t>& poly, const Field& F) {
    size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= F.q();
        for (uint64_t t = 0; t < count; ++t) {
            std::vector<uint32_t> div(d + 1);
            uint64_t tt = t;
            for (size_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(tt % F.q());
                tt /= F.q();
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(poly, div, F))) return false;
        }
    }
    return true;
}

// Monic irreducible of the given degree over F with the smallest code of its
// non-leading coefficients.
std::vector<uint32_t> lowest_irreducible(uint32_t deg, const Field& F) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < deg; ++i) count *= F.q();
    for (uint64_t t = 0; t < count; ++t) {
        std::vector<uint32_t> poly(deg + 1);
        uint64_t tt = t;
        for (uint32_t i = 0; i < deg; ++i) {
            poly[i] = static_cast<uint32_t>(tt % F.q());
            tt /= F.q();
        }
        poly[deg] = 1;
        if (poly_irreducible(poly, F)) return poly;
    }
    throw domain_error("no irreducible polynomial found");
}

} // namespace

Field::Field(uint32_t q) {
    require(q >= 2 && q <= kMaxQ, "field size must be in [2, 2^20]");
    uint32_t p = 0;
    for (uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    uint32_t e = 0, t = q;
    while (t > 1) {
        require(t % p == 0, "field size must be a prime power");
        t /= p;
        ++e;
    }
    *this = Field(p, e);
}

Field::Field(uint32_t p, uint32_t e) {
    require(is_prime(p), "field characteristic must be prime");
    require(e >= 1, "field degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        require(q <= kMaxQ, "field size must be in [2, 2^20]");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = static_cast<uint32_t>(q);
    if (e >= 2) {
        Field prime(p, 1);
        impl->poly = lowest_irreducible(e, prime);
    }
    impl_ = std::move(impl);
    if (impl_->q <= 256) {
        auto full = std::make_shared<Impl>(*impl_);
        uint32_t n = impl_->q;
        full->mul_table.assign(static_cast<size_t>(n) * n, 0);
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b)
                full->mul_table[static_cast<size_t>(a) * n + b] = mul_slow(a, b);
        full->inv_table.assign(n, 0);
        for (uint32_t a = 1; a < n; ++a)
            full->inv_table[a] = pow(a, n - 2);
        impl_ = std::move(full);
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (im.e == 1) return (a + b) % im.p;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < im.e; ++i) {
        out += ((a % im.p) + (b % im.p)) % im.p * mult;
        a /= im.p;
        b /= im.p;
        mult *= im.p;
    }
    return out;
}

uint32_t Field::neg(uint32_t a) const {
    const auto& im = *impl_;
    if (im.e == 1) return a == 0 ? 0 : im.p - a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < im.e; ++i) {
        uint32_t d = a % im.p;
        out += (d == 0 ? 0 : im.p - d) * mult;
        a /= im.p;
        mult *= im.p;
    }
    return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (im.e == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % im.p);
    auto da = digits_of(a, im.p, im.e);
    auto db = digits_of(b, im.p, im.e);
    std::vector<uint32_t> conv(2 * im.e - 1, 0);
    for (uint32_t i = 0; i < im.e; ++i)
        for (uint32_t j = 0; j < im.e; ++j)
            conv[i + j] = (conv[i + j] + da[i] * db[j]) % im.p;
    Field prime(im.p, 1);
    auto rem = poly_mod(std::move(conv), im.poly, prime);
    rem.resize(im.e, 0);
    return code_of(rem, im.p);
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (!im.mul_table.empty())
        return im.mul_table[static_cast<size_t>(a) * im.q + b];
    return mul_slow(a, b);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    uint32_t out = 1 % impl_->q;
    uint32_t base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t Field::inv(uint32_t a) const {
    require(a != 0, "inverse of zero");
    const auto& im = *impl_;
    if (!im.inv_table.empty()) return im.inv_table[a];
    return pow(a, im.q - 2);
}

ExtField::ExtField(Field base, uint32_t m) : base_(std::move(base)), m_(m) {
    require(m >= 1, "extension degree must be positive");
    uint64_t qm = 1;
    for (uint32_t i = 0; i < m; ++i) {
        qm *= base_.q();
        require(qm <= kMaxQ, "extension field size must be <= 2^20");
    }
    qm_ = static_cast<uint32_t>(qm);
    poly_ = lowest_irreducible(m, base_);

    // x^(m+j) mod poly for j = 0..m-2, used to fold products back down.
    std::vector<std::vector<uint32_t>> xpow;
    std::vector<uint32_t> cur(poly_.begin(), poly_.end() - 1);
    for (uint32_t i = 0; i < m; ++i) cur[i] = base_.neg(cur[i]);
    for (uint32_t j = 0; j + 1 < m; ++j) {
        xpow.push_back(cur);
        std::vector<uint32_t> next(m, 0);
        uint32_t top = cur[m - 1];
        for (uint32_t i = 0; i + 1 < m; ++i) next[i + 1] = cur[i];
        for (uint32_t i = 0; i < m; ++i)
            next[i] = base_.add(next[i], base_.mul(top, base_.neg(poly_[i])));
        cur = std::move(next);
    }
    xfold_ = std::move(xpow);

    frob_basis_.resize(m_);
    uint32_t xi = 1 % qm_;
    uint32_t x = generator();
    for (uint32_t i = 0; i < m_; ++i) {
        frob_basis_[i] = pow(xi, base_.q());
        xi = mul(xi, x);
    }
}

uint32_t ExtField::generator() const {
    if (m_ == 1) return base_.neg(poly_[0]);
    return base_.q();
}

uint32_t ExtField::add(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += base_.add(a % base_.q(), b % base_.q()) * static_cast<uint32_t>(mult);
        a /= base_.q();
        b /= base_.q();
        mult *= base_.q();
    }
    return out;
}

uint32_t ExtField::sub(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += base_.sub(a % base_.q(), b % base_.q()) * static_cast<uint32_t>(mult);
        a /= base_.q();
        b /= base_.q();
        mult *= base_.q();
    }
    return out;
}

uint32_t ExtField::scalar_mul(uint32_t c, uint32_t a) const {
    uint32_t out = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += base_.mul(c, a % base_.q()) * static_cast<uint32_t>(mult);
        a /= base_.q();
        mult *= base_.q();
    }
    return out;
}

uint32_t ExtField::mul(uint32_t a, uint32_t b) const {
    auto da = digits_of(a, base_.q(), m_);
    auto db = digits_of(b, base_.q(), m_);
    std::vector<uint32_t> conv(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            conv[i + j] = base_.add(conv[i + j], base_.mul(da[i], db[j]));
    }
    uint32_t out = code_of(std::vector<uint32_t>(conv.begin(), conv.begin() + m_), base_.q());
    for (uint32_t j = 0; j + 1 < m_; ++j) {
        if (conv[m_ + j] == 0) continue;
        out = add(out, scalar_mul(conv[m_ + j], code_of(xfold_[j], base_.q())));
    }
    return out;
}

uint32_t ExtField::pow(uint32_t a, uint64_t e) const {
    uint32_t out = 1 % qm_;
    uint32_t base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

uint32_t ExtField::inv(uint32_t a) const {
    require(a != 0, "inverse of zero");
    return pow(a, static_cast<uint64_t>(qm_) - 2);
}

uint32_t ExtField::frobenius(uint32_t a) const {
    uint32_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % base_.q();
        a /= base_.q();
        if (d != 0) out = add(out, scalar_mul(d, frob_basis_[i]));
    }
    return out;
}

std::vector<uint32_t> ExtField::to_vector(uint32_t a) const {
    return digits_of(a, base_.q(), m_);
}

uint32_t ExtField::from_vector(const std::vector<uint32_t>& coeffs) const {
    require(coeffs.size() == m_, "coefficient vector has wrong length");
    for (uint32_t c : coeffs) require(c < base_.q(), "coefficient out of range");
    return code_of(coeffs, base_.q());
}

} // namespace grasscode
