#ifndef HYPNET_HALF_INT_HPP
#define HYPNET_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

namespace hypnet {

// Exact value in (1/2)Z, stored as twice the value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

    // Largest integer not above the value.
    constexpr std::int64_t floor() const
    {
        return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
    }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    constexpr HalfInt& operator*=(std::int64_t k) { twice_ *= k; return *this; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return a *= k; }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return a *= k; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

    std::string str() const
    {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

inline constexpr HalfInt half = HalfInt::from_twice(1);

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }
inline HalfInt min(HalfInt a, HalfInt b) { return b < a ? b : a; }

} // namespace hypnet

#endif
