#include "whw/scalar.hpp"

#include "whw/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace whw {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(long long n, std::uint64_t p) {
    long long m = n % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
        throw std::invalid_argument("not a supported prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& text) {
    const std::string t = trim(text);
    if (t == "Q") return rationals();
    if (t.rfind("Fp:", 0) == 0) {
        try {
            std::size_t pos = 0;
            const auto p = std::stoull(t.substr(3), &pos);
            if (pos + 3 != t.size()) throw ParseError("bad field spec '" + text + "'");
            return prime(p);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad field spec '" + text + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("bad field spec '" + text + "'");
        }
    }
    throw ParseError("bad field spec '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
    return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

bool char_divides(const Field& field, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("char_divides: n must be positive");
    return !field.is_rational() && n % field.characteristic() == 0;
}

Scalar Scalar::from_int(const Field& f, long long n) {
    if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    return Scalar(Mod{reduce(n, f.characteristic()), f.characteristic()});
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty scalar");
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + text + "'");
        if (q.get_den() == 0) throw DivisionByZero("rational '" + text + "'");
        q.canonicalize();
        return Scalar(std::move(q));
    }
    std::string num = t;
    if (auto pos = t.find("mod"); pos != std::string::npos) {
        num = trim(t.substr(0, pos));
        const std::string mod = trim(t.substr(pos + 3));
        if (mod != std::to_string(f.characteristic()))
            throw FieldMismatch("scalar '" + text + "' is not over " + f.to_string());
    }
    mpz_class z;
    if (z.set_str(num, 10) != 0) throw ParseError("bad prime-field element '" + text + "'");
    mpz_class p(std::to_string(f.characteristic()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return Scalar(Mod{std::stoull(r.get_str()), f.characteristic()});
}

Field Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
    return Field(std::get<Mod>(v_).p);
}

bool Scalar::is_zero() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Mod>(v_).value == 0;
}

bool Scalar::is_one() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q == 1;
    const auto& m = std::get<Mod>(v_);
    return m.value == 1 % m.p;
}

void Scalar::require_same_field(const Scalar& b) const {
    const bool qa = std::holds_alternative<mpq_class>(v_);
    const bool qb = std::holds_alternative<mpq_class>(b.v_);
    if (qa != qb || (!qa && std::get<Mod>(v_).p != std::get<Mod>(b.v_).p))
        throw FieldMismatch(field().to_string() + " vs " + b.field().to_string());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (auto q = std::get_if<mpq_class>(&v_)) {
        mpq_class r = 1 / *q;
        r.canonicalize();
        return Scalar(std::move(r));
    }
    const auto& m = std::get<Mod>(v_);
    return Scalar(Mod{pow_mod(m.value, m.p - 2, m.p), m.p});
}

Scalar Scalar::operator-() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& m = std::get<Mod>(v_);
    return Scalar(Mod{m.value == 0 ? 0 : m.p - m.value, m.p});
}

Scalar& Scalar::operator+=(const Scalar& b) {
    require_same_field(b);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(b.v_);
    } else {
        auto& m = std::get<Mod>(v_);
        const auto bv = std::get<Mod>(b.v_).value;
        m.value = m.value >= m.p - bv ? m.value - (m.p - bv) : m.value + bv;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
    require_same_field(b);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(b.v_);
    } else {
        auto& m = std::get<Mod>(v_);
        m.value = mul_mod(m.value, std::get<Mod>(b.v_).value, m.p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
    require_same_field(b);
    return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (auto q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
    return std::get<Scalar::Mod>(a.v_).value == std::get<Scalar::Mod>(b.v_).value;
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return q->get_str(10);
    const auto& m = std::get<Mod>(v_);
    return std::to_string(m.value) + " mod " + std::to_string(m.p);
}

const mpq_class& Scalar::as_rational() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q;
    throw FieldMismatch("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
    if (auto m = std::get_if<Mod>(&v_)) return m->value;
    throw FieldMismatch("scalar is not a prime-field element");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace whw
