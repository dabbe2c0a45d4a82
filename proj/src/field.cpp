#include "idc/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace idc {
namespace {

// Primitive polynomials over GF(2), degree 1..16.
const uint32_t kModuli[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

int poly_degree(uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of a mod b over GF(2)[x].
uint32_t poly_mod(uint64_t a, uint32_t b) {
    int db = poly_degree(b);
    for (int i = 63 - db; i >= 0; --i) {
        if (a >> (i + db) & 1) a ^= static_cast<uint64_t>(b) << i;
    }
    return static_cast<uint32_t>(a);
}

bool is_irreducible(uint32_t m, int degree) {
    if (poly_degree(m) != degree) return false;
    if (degree == 1) return true;
    // Trial division by every polynomial of degree in [1, degree/2].
    for (uint32_t div = 2; poly_degree(div) <= degree / 2; ++div) {
        // long division remainder m mod div
        uint32_t r = m;
        int dd = poly_degree(div);
        for (int i = degree - dd; i >= 0; --i) {
            if (r >> (i + dd) & 1) r ^= div << i;
        }
        if (r == 0) return false;
    }
    return true;
}

}  // namespace

uint32_t FieldSpec::default_modulus(int degree) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("field degree must be in [1,16]");
    return kModuli[degree];
}

std::shared_ptr<const FieldSpec> FieldSpec::with_degree(int degree) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    auto spec = std::make_shared<const FieldSpec>(degree, default_modulus(degree));
    cache[degree] = spec;
    return spec;
}

FieldSpec::FieldSpec(int degree, uint32_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("field degree must be in [1,16]");
    if (!is_irreducible(modulus, degree)) throw std::invalid_argument("modulus is not irreducible of the stated degree");
    q_ = 1u << degree;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        if (x != 1 && log_[x] != 0) throw std::invalid_argument("modulus is not primitive: x does not generate the group");
        log_[x] = i;
        x = mul_slow(x, 2);  // multiply by alpha = x
    }
    if (x != 1) throw std::invalid_argument("modulus is not primitive");
}

uint32_t FieldSpec::mul_slow(uint32_t x, uint32_t y) const {
    uint32_t r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x >> degree_) x ^= modulus_;
    }
    return r;
}

uint32_t FieldSpec::add(uint32_t x, uint32_t y) const { return x ^ y; }

uint32_t FieldSpec::mul(uint32_t x, uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    uint32_t s = log_[x] + log_[y];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

uint32_t FieldSpec::inv(uint32_t x) const {
    if (x == 0) throw std::invalid_argument("inverse of zero");
    uint32_t e = log_[x];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
}

uint32_t FieldSpec::pow(uint32_t x, uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    uint64_t le = (static_cast<uint64_t>(log_[x]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
}

int FieldSpec::basis_coefficient(uint32_t p, uint32_t a, int basis_index) const {
    if (basis_index < 1 || basis_index > degree_) throw std::invalid_argument("basis index out of [1, degree]");
    return (mul(p, a) >> (basis_index - 1)) & 1;
}

static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same(*b.spec()))
        throw std::invalid_argument("mismatched field specs");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->add(v_, o.v_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->mul(v_, o.v_));
}

FieldElement FieldElement::inverse() const { return FieldElement(spec_, spec_->inv(v_)); }

}  // namespace idc
