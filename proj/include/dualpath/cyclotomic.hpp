#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace dualpath {

/// Q(zeta_m), elements stored in the power basis 1, z, ..., z^(d-1) with
/// d = phi(m), reduced modulo the m-th cyclotomic polynomial.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(int m);

    int order() const { return m_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    /// Monic, low-to-high coefficients.
    const std::vector<mpz_class>& modulus() const { return modulus_; }
    long double cos_at(int j) const { return cos_[j]; }
    long double sin_at(int j) const { return sin_[j]; }

    explicit CyclotomicField(int m);

private:
    int m_;
    std::vector<mpz_class> modulus_;
    std::vector<long double> cos_, sin_;
};

/// cyclotomic_polynomial(12) == {1, 0, -1, 0, 1}.
std::vector<mpz_class> cyclotomic_polynomial(int m);

class Cyc {
public:
    Cyc() = default;
    static Cyc rational(std::shared_ptr<const CyclotomicField> f, const mpq_class& q);
    /// zeta^e for any integer e.
    static Cyc zeta(std::shared_ptr<const CyclotomicField> f, long long e);

    const std::shared_ptr<const CyclotomicField>& field() const { return f_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Numeric value; `magnitude` bounds the rounding error scale.
    long double real() const;
    long double imag() const;
    long double magnitude() const;

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
    friend bool operator==(const Cyc& a, const Cyc& b) { return (a - b).is_zero(); }

    Cyc scaled(const mpq_class& q) const;
    std::string to_string() const;

private:
    Cyc(std::shared_ptr<const CyclotomicField> f, std::vector<mpq_class> c);
    std::shared_ptr<const CyclotomicField> f_;
    std::vector<mpq_class> c_;
};

/// Sign of a real element: exact zero test, then a numeric sign certified
/// against the rounding bound. Returns 0 for zero; throws if uncertifiable.
int certified_sign(const Cyc& x);

}  // namespace dualpath
