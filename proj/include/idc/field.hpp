#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace idc {

// Arithmetic in GF(2^l), l <= 16. Elements are bit masks of polynomials over
// GF(2); the modulus is an irreducible polynomial of degree l. Multiplication
// goes through log/antilog tables built at construction.
class FieldSpec {
public:
    FieldSpec(int degree, uint32_t modulus);

    // Field with the built-in modulus for this degree.
    static std::shared_ptr<const FieldSpec> with_degree(int degree);
    // Built-in irreducible (primitive) modulus for degree l in [1,16].
    static uint32_t default_modulus(int degree);

    int degree() const { return degree_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return q_; }

    uint32_t add(uint32_t x, uint32_t y) const;
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inv(uint32_t x) const;
    uint32_t div(uint32_t x, uint32_t y) const { return mul(x, inv(y)); }
    uint32_t pow(uint32_t x, uint64_t e) const;

    // alpha^e where alpha = x is the polynomial generator (moduli in the
    // built-in table are primitive, which the constructor verifies by
    // checking the antilog table covers all q-1 nonzero elements).
    uint32_t antilog(uint32_t e) const { return exp_[e % (q_ - 1)]; }

    // Coefficient of p*a in the polynomial basis 1, x, ..., x^(l-1),
    // basis_index in [1, l]. The map a |-> result is GF(2)-linear in the bits
    // of a for fixed p.
    int basis_coefficient(uint32_t p, uint32_t a, int basis_index) const;

    bool same(const FieldSpec& other) const {
        return degree_ == other.degree_ && modulus_ == other.modulus_;
    }

private:
    int degree_;
    uint32_t modulus_;
    uint32_t q_;
    std::vector<uint32_t> exp_;  // exp_[i] = alpha^i, i in [0, q-2]
    std::vector<uint32_t> log_;  // log_[x] for x != 0

    uint32_t mul_slow(uint32_t x, uint32_t y) const;
};

// A field element tied to its parent spec. Arithmetic checks the specs match.
class FieldElement {
public:
    FieldElement() : spec_(nullptr), v_(0) {}
    FieldElement(std::shared_ptr<const FieldSpec> spec, uint32_t v) : spec_(std::move(spec)), v_(v) {}

    uint32_t value() const { return v_; }
    const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const { return v_ == o.v_ && spec_->same(*o.spec_); }

private:
    std::shared_ptr<const FieldSpec> spec_;
    uint32_t v_;
};

}  // namespace idc
