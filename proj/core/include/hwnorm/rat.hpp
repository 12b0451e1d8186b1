#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hwn {

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rat parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_half_integer() const;  // value in Z + 1/2
    int sign() const { return sgn(v_); }

    mpz_class floor() const;
    mpz_class ceil() const;
    // Integral value as a machine integer; throws if not integral or out of range.
    long to_long() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Half-integer stored as twice its value.
class Half {
public:
    constexpr Half() = default;
    constexpr Half(long long integer) : d_(2 * integer) {}
    static constexpr Half from_doubled(long long doubled) {
        Half h;
        h.d_ = doubled;
        return h;
    }
    // Accepts "p" or "p/2".
    static Half parse(std::string_view text);
    static Half from_rat(const Rat& r);

    constexpr long long doubled() const { return d_; }
    constexpr bool is_integer() const { return d_ % 2 == 0; }
    // Integral value; throws if not integral.
    long long to_int() const;
    Rat to_rat() const { return Rat(static_cast<long>(d_), 2); }
    std::string str() const;

    constexpr Half abs() const { return from_doubled(d_ < 0 ? -d_ : d_); }
    constexpr Half operator-() const { return from_doubled(-d_); }
    constexpr Half& operator+=(Half o) { d_ += o.d_; return *this; }
    constexpr Half& operator-=(Half o) { d_ -= o.d_; return *this; }
    friend constexpr Half operator+(Half a, Half b) { return a += b; }
    friend constexpr Half operator-(Half a, Half b) { return a -= b; }
    friend constexpr Half operator*(Half a, long long k) { return from_doubled(a.d_ * k); }
    friend constexpr Half operator*(long long k, Half a) { return from_doubled(a.d_ * k); }

    friend constexpr bool operator==(Half a, Half b) = default;
    friend constexpr auto operator<=>(Half a, Half b) = default;

private:
    long long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, Half h);

}  // namespace hwn

template <>
struct std::hash<hwn::Rat> {
    size_t operator()(const hwn::Rat& r) const noexcept;
};
