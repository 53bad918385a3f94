#ifndef WHW_SCALAR_HPP
#define WHW_SCALAR_HPP

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <variant>

namespace whw {

// The ground field: the rationals or a prime field GF(p).
class Field {
public:
    Field() = default; // rationals

    static Field rationals() { return Field(); }
    // Throws std::invalid_argument unless p is prime and p < 2^62.
    static Field prime(std::uint64_t p);
    // Accepts "Q" or "Fp:<p>".
    static Field parse(const std::string& text);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

// True iff char(field) divides n. Characteristic zero divides nothing.
bool char_divides(const Field& field, std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with a positive
// denominator (mpq canonical form); prime-field values live in [0, p).
// Binary operations on elements of different fields throw FieldMismatch.
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long n);
    static Scalar rational(const mpq_class& q);
    static Scalar rational(long long num, long long den);

    // "p/q", "n" for rationals; "n mod p" (or a bare integer) for GF(p).
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text: "n" or "p/q" for rationals, "n mod p" for GF(p).
    std::string to_string() const;

    // Rational view; only valid for rational scalars.
    const mpq_class& as_rational() const;
    // Residue in [0, p); only valid for prime-field scalars.
    std::uint64_t residue() const;

private:
    struct Mod {
        std::uint64_t value;
        std::uint64_t p;
    };

    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(Mod m) : v_(m) {}

    void require_same_field(const Scalar& b) const;

    std::variant<mpq_class, Mod> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace whw

#endif
