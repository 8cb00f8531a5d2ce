#include "gbcore/scalar.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "gbcore/error.hpp"

namespace gbcore {

SmallSet SmallSet::of(std::initializer_list<unsigned> elements) {
    SmallSet s;
    for (unsigned k : elements) {
        if (k >= 64) throw ValueError("set element " + std::to_string(k) + " exceeds 63");
        s.bits |= std::uint64_t{1} << k;
    }
    return s;
}

SmallSet SmallSet::universe(unsigned size) {
    if (size == 0 || size > 64) throw ValueError("set universe size must be in [1, 64]");
    return SmallSet{size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1};
}

std::string_view to_string(Domain d) noexcept {
    switch (d) {
        case Domain::real: return "real";
        case Domain::integer: return "integer";
        case Domain::natural: return "natural";
        case Domain::boolean: return "boolean";
        case Domain::small_set: return "small-set";
    }
    return "?";
}

Domain domain_from_string(std::string_view name) {
    for (Domain d : {Domain::real, Domain::integer, Domain::natural, Domain::boolean,
                     Domain::small_set}) {
        if (to_string(d) == name) return d;
    }
    throw ValueError("unknown scalar domain '" + std::string(name) + "'");
}

namespace {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

template <class T>
T parse_number(std::string_view text) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if constexpr (std::is_floating_point_v<T>) {
        if (first != last && *first == '+') ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw ValueError("value '" + std::string(text) + "' out of range");
    }
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ValueError("cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
}

}  // namespace

std::string format_scalar(const Scalar& s) {
    switch (domain_of(s)) {
        case Domain::real: return format_real(std::get<double>(s));
        case Domain::integer: return std::to_string(std::get<std::int64_t>(s));
        case Domain::natural: return std::to_string(std::get<std::uint64_t>(s));
        case Domain::boolean: return std::get<bool>(s) ? "1" : "0";
        case Domain::small_set: return std::to_string(std::get<SmallSet>(s).bits);
    }
    return {};
}

Scalar parse_scalar(Domain d, std::string_view text) {
    switch (d) {
        case Domain::real: {
            double v = parse_number<double>(text);
            if (std::isnan(v)) throw ValueError("NaN is not a valid real value");
            return real(v);
        }
        case Domain::integer: return integer(parse_number<std::int64_t>(text));
        case Domain::natural:
            if (!text.empty() && text.front() == '-') {
                throw ValueError("negative value '" + std::string(text) + "' for natural domain");
            }
            return natural(parse_number<std::uint64_t>(text));
        case Domain::boolean: {
            auto v = parse_number<std::uint64_t>(text);
            if (v > 1) throw ValueError("boolean value must be 0 or 1, got '" + std::string(text) + "'");
            return boolean(v == 1);
        }
        case Domain::small_set: return small_set(SmallSet{parse_number<std::uint64_t>(text)});
    }
    throw ValueError("unknown domain");
}

}  // namespace gbcore
