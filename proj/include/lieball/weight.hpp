#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace lieball {

/// An element of (1/2)Z, stored as twice its value so that all arithmetic
/// stays in machine integers.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}  // NOLINT: integers embed implicitly

    static constexpr HalfInt from_twice(std::int64_t t)
    {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // Only meaningful when is_integer().
    constexpr std::int64_t as_integer() const { return twice_ / 2; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt h) { return from_twice(k * h.twice_); }
    friend constexpr HalfInt operator*(HalfInt h, std::int64_t k) { return from_twice(k * h.twice_); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    std::string to_string() const;

private:
    std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// A weight in coordinates with respect to an orthonormal basis e_0..e_m (rank
/// m+1) or e_1..e_m (rank m). Coordinates are half-integers.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank) {}
    explicit Weight(std::vector<HalfInt> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<HalfInt> coords) : coords_(coords) {}

    static Weight from_ints(std::span<const int> v);
    static Weight zero(std::size_t rank) { return Weight(rank); }
    /// (c, c, ..., c)
    static Weight constant(std::size_t rank, HalfInt c);
    /// Basis vector e_index (0-based position).
    static Weight unit(std::size_t rank, std::size_t index);

    std::size_t rank() const { return coords_.size(); }
    HalfInt operator[](std::size_t i) const { return coords_[i]; }
    HalfInt& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<HalfInt>& coords() const { return coords_; }

    bool is_integral() const;
    /// Throws std::domain_error unless is_integral().
    std::vector<int> to_ints() const;

    /// Multiplies by 1/2. Requires integral coordinates so the result stays in (1/2)Z.
    Weight halved() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const;
    friend Weight operator*(std::int64_t k, const Weight& w);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

    std::string to_string() const;

private:
    std::vector<HalfInt> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Standard bilinear pairing. `root` must be integral, so the result lies in (1/2)Z.
HalfInt pairing(const Weight& w, const Weight& root);

}  // namespace lieball
