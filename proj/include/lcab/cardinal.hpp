#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcab {

/// A cardinal in {0, 1, 2, ...} ∪ {ℵ0}.  Nothing above ℵ0 is representable.
class cardinal {
public:
    constexpr cardinal() = default;

    static constexpr cardinal finite(std::uint64_t n) {
        cardinal c;
        c.value_ = n;
        return c;
    }
    static constexpr cardinal aleph0() {
        cardinal c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_aleph0() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

    constexpr std::uint64_t value() const {
        if (infinite_) throw std::logic_error("cardinal::value on aleph0");
        return value_;
    }

    friend cardinal operator+(cardinal a, cardinal b) {
        if (a.infinite_ || b.infinite_) return aleph0();
        std::uint64_t s = 0;
        if (__builtin_add_overflow(a.value_, b.value_, &s))
            throw std::overflow_error("cardinal addition overflow");
        return finite(s);
    }

    friend cardinal operator*(cardinal a, cardinal b) {
        if (a.is_zero() || b.is_zero()) return finite(0);
        if (a.infinite_ || b.infinite_) return aleph0();
        std::uint64_t p = 0;
        if (__builtin_mul_overflow(a.value_, b.value_, &p))
            throw std::overflow_error("cardinal multiplication overflow");
        return finite(p);
    }

    friend constexpr bool operator==(cardinal a, cardinal b) = default;

    // Finite cardinals in order, then aleph0.
    friend constexpr std::strong_ordering operator<=>(cardinal a, cardinal b) {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return infinite_ ? "w" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

} // namespace lcab
