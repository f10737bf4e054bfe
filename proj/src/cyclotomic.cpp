#include "dualpath/cyclotomic.hpp"

#include "dualpath/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace dualpath {

namespace {

using Poly = std::vector<mpz_class>;

// Exact division by a monic polynomial.
Poly divide(Poly num, const Poly& den) {
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    Poly q(nn - dn + 1);
    for (int i = nn; i >= dn; --i) {
        mpz_class c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (int i = 0; i < dn; ++i)
        if (num[i] != 0) throw InternalInvariantError("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, Poly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(m, p);
    return p;
}

CyclotomicField::CyclotomicField(int m) : m_(m), modulus_(cyclotomic_polynomial(m)) {
    cos_.resize(m);
    sin_.resize(m);
    for (int j = 0; j < m; ++j) {
        const long double a = 2.0L * std::numbers::pi_v<long double> * j / m;
        cos_[j] = std::cos(a);
        sin_[j] = std::sin(a);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_shared<const CyclotomicField>(m);
    return slot;
}

Cyc::Cyc(std::shared_ptr<const CyclotomicField> f, std::vector<mpq_class> c) : f_(std::move(f)), c_(std::move(c)) {}

Cyc Cyc::rational(std::shared_ptr<const CyclotomicField> f, const mpq_class& q) {
    std::vector<mpq_class> c(f->degree(), 0);
    c[0] = q;
    return Cyc(std::move(f), std::move(c));
}

namespace {

void reduce(std::vector<mpq_class>& c, const std::vector<mpz_class>& mod) {
    const int d = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        if (c[i] == 0) continue;
        const mpq_class k = c[i];
        for (int j = 0; j <= d; ++j) c[i - d + j] -= k * mod[j];
    }
    c.resize(d);
}

void same_field(const Cyc& a, const Cyc& b) {
    if (a.field() != b.field()) throw InternalInvariantError("cyclotomic elements from different fields");
}

}  // namespace

Cyc Cyc::zeta(std::shared_ptr<const CyclotomicField> f, long long e) {
    const int m = f->order();
    const int k = static_cast<int>(((e % m) + m) % m);
    std::vector<mpq_class> c(std::max(k + 1, f->degree()), 0);
    c[k] = 1;
    reduce(c, f->modulus());
    return Cyc(std::move(f), std::move(c));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

long double Cyc::real() const {
    long double s = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) s += static_cast<long double>(c_[j].get_d()) * f_->cos_at(static_cast<int>(j));
    return s;
}

long double Cyc::imag() const {
    long double s = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) s += static_cast<long double>(c_[j].get_d()) * f_->sin_at(static_cast<int>(j));
    return s;
}

long double Cyc::magnitude() const {
    long double s = 0;
    for (const auto& x : c_) s += std::fabs(static_cast<long double>(x.get_d()));
    return s;
}

Cyc Cyc::operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return Cyc(f_, std::move(c));
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    same_field(a, b);
    auto c = a.c_;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += b.c_[j];
    return Cyc(a.f_, std::move(c));
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    same_field(a, b);
    auto c = a.c_;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= b.c_[j];
    return Cyc(a.f_, std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    same_field(a, b);
    const std::size_t d = a.c_.size();
    std::vector<mpq_class> c(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
    }
    reduce(c, a.f_->modulus());
    return Cyc(a.f_, std::move(c));
}

Cyc Cyc::scaled(const mpq_class& q) const {
    auto c = c_;
    for (auto& x : c) x *= q;
    return Cyc(f_, std::move(c));
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << c_[j].get_str();
        if (j > 0) os << "*z^" << j;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

int certified_sign(const Cyc& x) {
    if (x.is_zero()) return 0;
    const long double v = x.real();
    const long double bound = 1e-15L * (1 + x.magnitude());
    if (std::fabs(v) <= bound) throw ValidationError("PerturbationFailure: sign of a near-zero quantity is not certifiable");
    return v > 0 ? 1 : -1;
}

}  // namespace dualpath
