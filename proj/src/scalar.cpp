#include "leibhom/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace leibhom {

namespace {

using u128 = unsigned __int128;

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 v)
{
    const bool neg = v < 0;
    u128 m = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class &z) { return z.fits_slong_p() && z != LONG_MIN; }

} // namespace

Scalar::Scalar(std::int64_t value) : num_(value), den_(1)
{
    if (value == std::numeric_limits<std::int64_t>::min()) {
        assign(mpq_class(mpz_class(static_cast<long>(value))));
    }
}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw std::domain_error("Scalar: zero denominator");
    }
    assign(static_cast<__int128>(numerator), static_cast<__int128>(denominator));
}

Scalar::Scalar(const mpq_class &value) { assign(value); }

Scalar::Scalar(const Scalar &other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Scalar &Scalar::operator=(const Scalar &other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Scalar Scalar::parse(std::string_view text)
{
    auto bad = [&](const char *why) {
        return std::invalid_argument("invalid rational '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::string &out) {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        out.assign(text.substr(start, pos - start));
        return pos > start;
    };
    std::string num;
    std::string den = "1";
    if (!digits(num)) {
        throw bad("expected digits");
    }
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!digits(den)) {
            throw bad("expected denominator digits");
        }
    }
    if (pos != text.size()) {
        throw bad("trailing characters");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw bad("zero denominator");
    }
    if (negative) {
        n = -n;
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const
{
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Scalar::to_string() const
{
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

void Scalar::assign(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num <= kMax && num >= -kMax && den <= kMax) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Scalar::assign(const mpq_class &q)
{
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

Scalar &Scalar::operator+=(const Scalar &rhs)
{
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, rhs.num_, &s) &&
                s != std::numeric_limits<std::int64_t>::min()) {
                num_ = s;
                return *this;
            }
        }
        const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
        const __int128 d = static_cast<__int128>(den_) * rhs.den_;
        assign(n, d);
        return *this;
    }
    assign(to_mpq() + rhs.to_mpq());
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) { return *this += -rhs; }

Scalar &Scalar::operator*=(const Scalar &rhs)
{
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, rhs.num_, &p) &&
                p != std::numeric_limits<std::int64_t>::min()) {
                num_ = p;
                return *this;
            }
        }
        const std::int64_t g1 = gcd64(num_, rhs.den_);
        const std::int64_t g2 = gcd64(rhs.num_, den_);
        const __int128 n = static_cast<__int128>(num_ / g1) * (rhs.num_ / g2);
        const __int128 d = static_cast<__int128>(den_ / g2) * (rhs.den_ / g1);
        assign(n, d);
        return *this;
    }
    assign(to_mpq() * rhs.to_mpq());
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("Scalar: division by zero");
    }
    if (!big_ && !rhs.big_) {
        const std::int64_t g1 = gcd64(num_, rhs.num_);
        const std::int64_t g2 = gcd64(den_, rhs.den_);
        const __int128 n = static_cast<__int128>(num_ / g1) * (rhs.den_ / g2);
        const __int128 d = static_cast<__int128>(den_ / g2) * (rhs.num_ / g1);
        assign(n, d);
        return *this;
    }
    assign(to_mpq() / rhs.to_mpq());
    return *this;
}

void Scalar::add_product(const Scalar &b, const Scalar &c)
{
    if (b.is_zero() || c.is_zero()) {
        return;
    }
    if (!big_ && !b.big_ && !c.big_ && den_ == 1 && b.den_ == 1 && c.den_ == 1) {
        std::int64_t p;
        std::int64_t s;
        if (!__builtin_mul_overflow(b.num_, c.num_, &p) && !__builtin_add_overflow(num_, p, &s) &&
            s != std::numeric_limits<std::int64_t>::min()) {
            num_ = s;
            return;
        }
    }
    *this += b * c;
}

bool operator==(const Scalar &a, const Scalar &b)
{
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) {
            return false;
        }
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
{
    if (!a.big_ && !b.big_) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace leibhom
