#include "ainfcat/scalar.hpp"

namespace ainfcat {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    return p_ == 0 ? "rational" : "prime:" + std::to_string(p_);
}

Field Field::parse(const std::string& s) {
    if (s == "rational") return rationals();
    if (s.rfind("prime:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(6));
        if (p > 0xffffffffUL) throw std::invalid_argument("Field::parse: characteristic too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("Field::parse: bad field spec '" + s + "'");
}

void Scalar::reduce() {
    if (p_ == 0) return;
    if (v_.get_den() != 1) {
        // normalize a fraction into F_p by multiplying with the denominator inverse
        mpz_class den = v_.get_den(), num = v_.get_num(), p = p_, inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("Scalar: denominator not invertible mod p");
        v_ = mpq_class(num * inv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
    v_ = mpq_class(r);
}

void Scalar::align(Scalar& a, Scalar& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
        a.p_ = b.p_;
        a.reduce();
    } else if (b.p_ == 0) {
        b.p_ = a.p_;
        b.reduce();
    } else {
        throw std::logic_error("Scalar: mixed prime fields");
    }
}

Scalar Scalar::fraction(const Field& f, const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw std::domain_error("Scalar::fraction: zero denominator");
    mpq_class q(a, b);
    q.canonicalize();
    return Scalar(f, q);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    a.v_ += b.v_;
    a.reduce();
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    a.v_ -= b.v_;
    a.reduce();
    return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    a.v_ *= b.v_;
    a.reduce();
    return a;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar r = *this;
    if (p_ == 0) {
        r.v_ = 1 / v_;
    } else {
        mpz_class inv, p = p_;
        mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
        r.v_ = mpq_class(inv);
        r.reduce();
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::string Scalar::to_string() const { return v_.get_str(); }

}  // namespace ainfcat
