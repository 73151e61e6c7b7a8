#include "grmod/field.hpp"

#include <sstream>

namespace grmod {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw GrmodError("field modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

std::string Field::str() const {
    return kind == Kind::Rational ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) {
    return of_int(f, 1);
}

Scalar Scalar::of_int(const Field& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == Field::Kind::Rational) {
        s.q_ = v;
    } else {
        long long m = static_cast<long long>(f.p);
        long long r = static_cast<long long>(v) % m;
        if (r < 0) r += m;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::of_mpq(const Field& f, const mpq_class& v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == Field::Kind::Rational) {
        s.q_ = v;
        s.q_.canonicalize();
    } else {
        mpz_class num = v.get_num(), den = v.get_den(), p(static_cast<unsigned long>(f.p));
        mpz_class nr = num % p, dr = den % p;
        if (nr < 0) nr += p;
        if (dr < 0) dr += p;
        if (dr == 0) throw GrmodError("denominator not invertible mod " + std::to_string(f.p));
        Scalar n = of_int(f, nr.get_si());
        Scalar d = of_int(f, dr.get_si());
        s = n / d;
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("cannot parse scalar '" + text + "'");
    q.canonicalize();
    return of_mpq(f, q);
}

bool Scalar::is_zero() const {
    return field_.kind == Field::Kind::Rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == Field::Kind::Rational ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("mixed-field operands: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == Field::Kind::Rational) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == Field::Kind::Rational) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == Field::Kind::Rational) {
        s.q_ = q_ * o.q_;
    } else {
        // p < 2^32 assumed for the product to fit; moduli at desk scale are tiny
        s.r_ = (static_cast<unsigned __int128>(r_) * o.r_) % field_.p;
    }
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw GrmodError("division by zero");
    Scalar s = *this;
    if (field_.kind == Field::Kind::Rational) {
        s.q_ = 1 / q_;
    } else {
        // extended Euclid on (r, p)
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(field_.p), nr = static_cast<long long>(r_);
        while (nr != 0) {
            long long qq = r / nr;
            long long tmp = t - qq * nt; t = nt; nt = tmp;
            tmp = r - qq * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(field_.p);
        s.r_ = static_cast<std::uint64_t>(t);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inv();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == Field::Kind::Rational) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.kind == Field::Kind::Rational ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::less(const Scalar& o) const {
    check_same(o);
    return field_.kind == Field::Kind::Rational ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == Field::Kind::Rational) {
        std::ostringstream os;
        os << q_;
        return os.str();
    }
    return std::to_string(r_);
}

} // namespace grmod
