#pragma once

// Dense univariate polynomial over a field element type E (Fp or Fp2).
// coefficients()[i] is the coefficient of t^i; the zero polynomial has an
// empty coefficient vector, so the leading stored coefficient is nonzero.

#include <cstdint>
#include <optional>
#include <vector>

#include "hypcert/errors.hpp"

namespace hypcert::arith {

template <class E>
class DensePolynomial {
  public:
    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePolynomial constant(const E& c) {
        return c.is_zero() ? DensePolynomial() : DensePolynomial(std::vector<E>{c});
    }

    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<E>& coefficients() const { return c_; }
    const E& operator[](size_t i) const { return c_.at(i); }

    E coeff_or_zero(size_t i, const E& like) const {
        return i < c_.size() ? c_[i] : like.zero();
    }

    E eval(const E& x) const {
        E acc = x.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const E zero = a.c_[0].zero();
        std::vector<E> out(std::max(a.c_.size(), b.c_.size()), zero);
        for (size_t i = 0; i < out.size(); ++i) {
            if (i < a.c_.size()) out[i] = out[i] + a.c_[i];
            if (i < b.c_.size()) out[i] = out[i] + b.c_[i];
        }
        return DensePolynomial(std::move(out));
    }

    DensePolynomial operator-() const {
        std::vector<E> out = c_;
        for (E& e : out) e = -e;
        return DensePolynomial(std::move(out));
    }

    friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
        return a + (-b);
    }

    friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return DensePolynomial();
        const E zero = a.c_[0].zero();
        std::vector<E> out(a.c_.size() + b.c_.size() - 1, zero);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return DensePolynomial(std::move(out));
    }

    DensePolynomial scaled(const E& s) const {
        std::vector<E> out = c_;
        for (E& e : out) e = e * s;
        return DensePolynomial(std::move(out));
    }

    // Drop all terms of degree > m.
    DensePolynomial truncated(uint64_t m) const {
        if (c_.size() <= m + 1) return *this;
        return DensePolynomial(std::vector<E>(c_.begin(), c_.begin() + m + 1));
    }

    // P(inner(t)) by Horner's rule.
    DensePolynomial composed_with(const DensePolynomial& inner) const {
        DensePolynomial acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    // t -> t^e (coefficient spreading).
    DensePolynomial with_argument_power(uint64_t e) const {
        if (is_zero() || e == 1) return *this;
        if (e == 0) throw precondition_error("argument power must be positive");
        const E zero = c_[0].zero();
        std::vector<E> out((c_.size() - 1) * e + 1, zero);
        for (size_t i = 0; i < c_.size(); ++i) out[i * e] = c_[i];
        return DensePolynomial(std::move(out));
    }

    friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const DensePolynomial& a, const DensePolynomial& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<E> c_;
};

// Index of the first coefficient where a and b differ, or nullopt if equal.
template <class E>
std::optional<size_t> first_coefficient_mismatch(const DensePolynomial<E>& a,
                                                 const DensePolynomial<E>& b) {
    size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    if (n == 0) return std::nullopt;
    const E* any = !a.coefficients().empty() ? &a.coefficients()[0] : &b.coefficients()[0];
    for (size_t i = 0; i < n; ++i) {
        E x = a.coeff_or_zero(i, *any);
        E y = b.coeff_or_zero(i, *any);
        if (x != y) return i;
    }
    return std::nullopt;
}

} // namespace hypcert::arith
