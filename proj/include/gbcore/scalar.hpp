#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>

namespace gbcore {

/// A subset of {0, ..., 63} stored as a bit mask. Bit k set means k is a member.
struct SmallSet {
    std::uint64_t bits = 0;

    static SmallSet of(std::initializer_list<unsigned> elements);
    static SmallSet universe(unsigned size);

    bool contains(unsigned k) const noexcept { return k < 64 && ((bits >> k) & 1U) != 0; }
    friend bool operator==(SmallSet, SmallSet) = default;
};

/// Scalar domains. The enumerator order matches the alternatives of Scalar.
enum class Domain : std::uint8_t { real, integer, natural, boolean, small_set };

using Scalar = std::variant<double, std::int64_t, std::uint64_t, bool, SmallSet>;

inline Domain domain_of(const Scalar& s) noexcept { return static_cast<Domain>(s.index()); }

std::string_view to_string(Domain d) noexcept;
Domain domain_from_string(std::string_view name);

inline Scalar real(double v) { return Scalar(std::in_place_type<double>, v); }
inline Scalar integer(std::int64_t v) { return Scalar(std::in_place_type<std::int64_t>, v); }
inline Scalar natural(std::uint64_t v) { return Scalar(std::in_place_type<std::uint64_t>, v); }
inline Scalar boolean(bool v) { return Scalar(std::in_place_type<bool>, v); }
inline Scalar small_set(SmallSet v) { return Scalar(std::in_place_type<SmallSet>, v); }

/// Text form used by every file format: shortest round-trip decimal for
/// reals ("inf", "-inf" for the infinities), decimal for integers, 0/1 for
/// booleans and the decimal bit mask for sets.
std::string format_scalar(const Scalar& s);

/// Inverse of format_scalar for the given domain. Throws ValueError.
Scalar parse_scalar(Domain d, std::string_view text);

}  // namespace gbcore
