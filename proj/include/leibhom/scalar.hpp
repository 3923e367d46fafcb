#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leibhom {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator both fit in a signed 64-bit word
/// are stored inline; anything larger lives in a GMP rational. The
/// representation is canonical: a value that fits inline is never stored as
/// a GMP rational, so structural equality is value equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value); // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t numerator, std::int64_t denominator);
    explicit Scalar(const mpq_class &value);

    Scalar(const Scalar &other);
    Scalar(Scalar &&other) noexcept = default;
    Scalar &operator=(const Scalar &other);
    Scalar &operator=(Scalar &&other) noexcept = default;
    ~Scalar() = default;

    /// Parses `[+-]digits[/digits]`. Throws std::invalid_argument on a
    /// grammar violation or a zero denominator.
    static Scalar parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] mpq_class to_mpq() const;
    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &rhs);
    Scalar &operator-=(const Scalar &rhs);
    Scalar &operator*=(const Scalar &rhs);
    /// Throws std::domain_error on division by zero.
    Scalar &operator/=(const Scalar &rhs);

    friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar &a, const Scalar &b);
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b);

    /// a += b * c without an intermediate temporary on the inline path.
    void add_product(const Scalar &b, const Scalar &c);

private:
    void assign(__int128 num, __int128 den);
    void assign(const mpq_class &q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace leibhom
