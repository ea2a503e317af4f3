#include "ptri/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace ptri {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

std::string strip_minus(std::string_view text, bool& negative) {
    std::string s(text);
    negative = false;
    static const std::string unicode_minus = "\xE2\x88\x92";
    if (s.rfind(unicode_minus, 0) == 0) {
        negative = true;
        s.erase(0, unicode_minus.size());
    } else if (!s.empty() && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    } else if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    return s;
}

}  // namespace

RingSpec RingSpec::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return RingSpec{Kind::prime_field, p};
}

RingSpec RingSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        auto body = text.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw InputError("bad field spec '" + std::string(text) + "'");
        return prime_field(p);
    }
    throw InputError("bad field spec '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string RingSpec::name() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(RingSpec ring, long value) : ring_(ring) {
    if (ring_.is_rational()) {
        q_ = value;
    } else {
        r_ = reduce_mpz(mpz_class(value), ring_.characteristic());
    }
}

Scalar::Scalar(RingSpec ring, const mpq_class& value) : ring_(ring) {
    if (ring_.is_rational()) {
        q_ = value;
        q_.canonicalize();
    } else {
        const auto p = ring_.characteristic();
        std::uint64_t den = reduce_mpz(value.get_den(), p);
        if (den == 0) throw std::domain_error("denominator divisible by characteristic");
        r_ = mulmod(reduce_mpz(value.get_num(), p), powmod(den, p - 2, p), p);
    }
}

Scalar Scalar::parse(RingSpec ring, std::string_view text) {
    bool negative = false;
    std::string body = strip_minus(text, negative);
    if (body.empty()) throw InputError("empty scalar");
    for (char c : body)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/'))
            throw InputError("bad scalar '" + std::string(text) + "'");
    mpq_class v;
    try {
        auto slash = body.find('/');
        if (slash == std::string::npos) {
            v = mpq_class(mpz_class(body));
        } else {
            mpz_class num(body.substr(0, slash));
            mpz_class den(body.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
            v = mpq_class(num, den);
            v.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw InputError("bad scalar '" + std::string(text) + "'");
    }
    if (negative) v = -v;
    try {
        return Scalar(ring, v);
    } catch (const std::domain_error&) {
        throw InputError("scalar '" + std::string(text) + "' undefined in " + ring.name());
    }
}

bool Scalar::is_zero() const { return ring_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return ring_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (!(ring_ == o.ring_))
        throw std::invalid_argument("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(ring_);
    if (ring_.is_rational()) {
        r.q_ = q_ + o.q_;
    } else {
        const auto p = ring_.characteristic();
        r.r_ = (r_ + o.r_) % p;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(ring_);
    if (ring_.is_rational()) {
        r.q_ = q_ - o.q_;
    } else {
        const auto p = ring_.characteristic();
        r.r_ = (r_ + p - o.r_) % p;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(ring_);
    if (ring_.is_rational()) {
        r.q_ = q_ * o.q_;
    } else {
        r.r_ = mulmod(r_, o.r_, ring_.characteristic());
    }
    return r;
}

Scalar Scalar::operator-() const { return Scalar(ring_) - *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r(ring_);
    if (ring_.is_rational()) {
        r.q_ = mpq_class(1) / q_;
        r.q_.canonicalize();
    } else {
        const auto p = ring_.characteristic();
        r.r_ = powmod(r_, p - 2, p);
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return ring_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    return ring_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ptri
