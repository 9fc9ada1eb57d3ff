#ifndef glcs_ext_len_hpp
#define glcs_ext_len_hpp

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace glcs {

/*
 * A length in {-inf} U {0, 1, 2, ...} U {+inf}.
 *
 * -inf marks an empty candidate set, +inf marks a candidate set containing
 * strings of unbounded length. Addition is absorbing for -inf first, then for
 * +inf, so that inf + (-inf) = -inf.
 */
class ExtLen {
public:
    // defaults to -inf, the value of an unreachable DP state
    constexpr ExtLen() noexcept = default;

    static constexpr ExtLen neg_inf() noexcept { return ExtLen(neg_inf_rep); }
    static constexpr ExtLen pos_inf() noexcept { return ExtLen(pos_inf_rep); }
    static constexpr ExtLen finite(std::uint64_t n) {
        if (n >= static_cast<std::uint64_t>(pos_inf_rep)) {
            throw std::overflow_error("ExtLen: finite length out of range");
        }
        return ExtLen(static_cast<rep_t>(n));
    }

    constexpr bool is_neg_inf() const noexcept { return rep == neg_inf_rep; }
    constexpr bool is_pos_inf() const noexcept { return rep == pos_inf_rep; }
    constexpr bool is_finite() const noexcept { return !is_neg_inf() && !is_pos_inf(); }

    // only meaningful when is_finite()
    constexpr std::uint64_t value() const {
        if (!is_finite()) {
            throw std::logic_error("ExtLen: value() of an infinite length");
        }
        return static_cast<std::uint64_t>(rep);
    }

    friend constexpr ExtLen operator+(ExtLen a, ExtLen b) {
        if (a.is_neg_inf() || b.is_neg_inf()) {
            return neg_inf();
        }
        if (a.is_pos_inf() || b.is_pos_inf()) {
            return pos_inf();
        }
        return finite(a.value() + b.value());
    }

    // the sentinel encoding makes the integer order the extended order
    friend constexpr auto operator<=>(ExtLen, ExtLen) noexcept = default;

    // "-inf", "inf", or the decimal length
    std::string to_string() const {
        if (is_neg_inf()) {
            return "-inf";
        }
        if (is_pos_inf()) {
            return "inf";
        }
        return std::to_string(rep);
    }

private:
    using rep_t = std::int32_t;
    static constexpr rep_t neg_inf_rep = std::numeric_limits<rep_t>::min();
    static constexpr rep_t pos_inf_rep = std::numeric_limits<rep_t>::max();

    constexpr explicit ExtLen(rep_t r) noexcept : rep(r) {}

    rep_t rep = neg_inf_rep;
};

inline constexpr ExtLen one_len = ExtLen::finite(1);

inline std::ostream& operator<<(std::ostream& out, ExtLen len) {
    return out << len.to_string();
}

}

#endif /* glcs_ext_len_hpp */
