#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptri {

/// Error raised for malformed user input (files, words, scalars).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Error raised when an internal invariant breaks (for example reduction fuel).
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The coefficient field: the rationals or a prime field F_p.
class RingSpec {
public:
    enum class Kind { rationals, prime_field };

    static RingSpec rationals() { return RingSpec{Kind::rationals, 0}; }
    /// Throws InputError unless p is prime.
    static RingSpec prime_field(std::uint64_t p);
    /// Parses "q" or "fp:<p>".
    static RingSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return kind_ == Kind::rationals; }
    std::string name() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// An exact field element. Rationals are kept reduced with positive
/// denominator, residues in [0, p).
class Scalar {
public:
    explicit Scalar(RingSpec ring = RingSpec::rationals()) : ring_(ring) {}
    Scalar(RingSpec ring, long value);
    Scalar(RingSpec ring, const mpq_class& value);

    static Scalar zero(RingSpec ring) { return Scalar(ring); }
    static Scalar one(RingSpec ring) { return Scalar(ring, 1L); }
    /// Accepts "7", "-2/3", "−5" (unicode minus) and for F_p also fractions.
    static Scalar parse(RingSpec ring, std::string_view text);

    const RingSpec& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    void check_same(const Scalar& o) const;

    RingSpec ring_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ptri
