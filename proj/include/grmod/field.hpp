#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "grmod/errors.hpp"

namespace grmod {

// Base field of a computation: the rationals or a prime field F_p.
// Every scalar in one computation carries the same Field value.
struct Field {
    enum class Kind { Rational, Prime };

    Kind kind = Kind::Rational;
    std::uint64_t p = 0; // modulus, meaningful iff kind == Prime

    static Field rationals() { return Field{Kind::Rational, 0}; }
    static Field prime(std::uint64_t p);

    bool operator==(const Field&) const = default;

    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. Rational payload is a GMP rational; prime-field
// payload is a residue in [0, p).
class Scalar {
public:
    Scalar() = default; // zero over Q; assign before mixed use
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long v);
    static Scalar of_mpq(const Field& f, const mpq_class& v);
    // Parses "3", "-1/2" over Q, or an integer (reduced mod p) over F_p.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for deterministic tie-breaking in output.
    bool less(const Scalar& o) const;

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }

    std::string str() const;

private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::rationals();
    mpq_class q_ = 0;
    std::uint64_t r_ = 0;
};

} // namespace grmod
