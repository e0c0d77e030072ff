#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ainfcat {

/// Ground field of a computation: the rationals, or F_p for a prime p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const;              // "rational" or "prime:p"
    static Field parse(const std::string& s);   // inverse of to_string

private:
    std::uint32_t p_ = 0;
};

bool is_prime_u32(std::uint32_t n);

/// Exact field element. Rational values are arbitrary-precision fractions;
/// prime-field values are integers normalized to [0, p). Untagged values
/// (default-constructed or built without a Field) act as literals: combined
/// with a prime-field scalar they are reduced into that field first.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f, long n) : v_(n), p_(f.characteristic()) { reduce(); }
    Scalar(const Field& f, const mpq_class& q) : v_(q), p_(f.characteristic()) {
        v_.canonicalize();
        reduce();
    }
    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    /// a/b with exact reduction; throws on b = 0.
    static Scalar fraction(const Field& f, const mpz_class& a, const mpz_class& b);

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;   // throws on division by zero
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    std::string to_string() const;

private:
    void reduce();
    static void align(Scalar& a, Scalar& b);

    mpq_class v_ = 0;
    std::uint32_t p_ = 0;
};

inline Scalar operator*(int n, const Scalar& s) { return Scalar(s.field(), n) * s; }

}  // namespace ainfcat
