#include "gbcore/semiring.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "gbcore/error.hpp"

namespace gbcore {

BinaryOp::BinaryOp(std::string name, Fn fn, Laws laws)
    : name_(std::move(name)), fn_(std::move(fn)), laws_(laws) {
    if (!fn_) throw ValueError("binary op '" + name_ + "' has no function");
}

namespace ops {
namespace {

constexpr Laws kCommAssoc{true, true};

[[noreturn]] void operand_mismatch(const std::string& op, const Scalar& a, const Scalar& b) {
    throw DomainMismatch("operator " + op + " applied to " + std::string(to_string(domain_of(a))) +
                         " and " + std::string(to_string(domain_of(b))) + " operands");
}

template <class T, class F>
BinaryOp typed(std::string name, Laws laws, F f) {
    return BinaryOp(name, [name, f](const Scalar& a, const Scalar& b) -> Scalar {
        const T* x = std::get_if<T>(&a);
        const T* y = std::get_if<T>(&b);
        if (x == nullptr || y == nullptr) operand_mismatch(name, a, b);
        return Scalar(std::in_place_type<T>, f(*x, *y));
    }, laws);
}

template <class T>
T checked_add(T x, T y) {
    T r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw OverflowError("overflow in " + std::to_string(x) + " + " + std::to_string(y));
    }
    return r;
}

template <class T>
T checked_mul(T x, T y) {
    T r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw OverflowError("overflow in " + std::to_string(x) + " * " + std::to_string(y));
    }
    return r;
}

[[noreturn]] void unsupported(std::string_view op, Domain d) {
    throw ValueError("operator " + std::string(op) + " is not defined on the " +
                     std::string(to_string(d)) + " domain");
}

}  // namespace

BinaryOp plus(Domain d) {
    switch (d) {
        case Domain::real: return typed<double>("plus", kCommAssoc, [](double x, double y) { return x + y; });
        case Domain::integer: return typed<std::int64_t>("plus", kCommAssoc, checked_add<std::int64_t>);
        case Domain::natural: return typed<std::uint64_t>("plus", kCommAssoc, checked_add<std::uint64_t>);
        default: unsupported("plus", d);
    }
}

BinaryOp times(Domain d) {
    switch (d) {
        case Domain::real: return typed<double>("times", kCommAssoc, [](double x, double y) { return x * y; });
        case Domain::integer: return typed<std::int64_t>("times", kCommAssoc, checked_mul<std::int64_t>);
        case Domain::natural: return typed<std::uint64_t>("times", kCommAssoc, checked_mul<std::uint64_t>);
        default: unsupported("times", d);
    }
}

BinaryOp min(Domain d) {
    auto f = [](auto x, auto y) { return y < x ? y : x; };
    switch (d) {
        case Domain::real: return typed<double>("min", kCommAssoc, f);
        case Domain::integer: return typed<std::int64_t>("min", kCommAssoc, f);
        case Domain::natural: return typed<std::uint64_t>("min", kCommAssoc, f);
        case Domain::boolean: return typed<bool>("min", kCommAssoc, [](bool x, bool y) { return x && y; });
        default: unsupported("min", d);
    }
}

BinaryOp max(Domain d) {
    auto f = [](auto x, auto y) { return x < y ? y : x; };
    switch (d) {
        case Domain::real: return typed<double>("max", kCommAssoc, f);
        case Domain::integer: return typed<std::int64_t>("max", kCommAssoc, f);
        case Domain::natural: return typed<std::uint64_t>("max", kCommAssoc, f);
        case Domain::boolean: return typed<bool>("max", kCommAssoc, [](bool x, bool y) { return x || y; });
        default: unsupported("max", d);
    }
}

BinaryOp lor() { return typed<bool>("lor", kCommAssoc, [](bool x, bool y) { return x || y; }); }
BinaryOp land() { return typed<bool>("land", kCommAssoc, [](bool x, bool y) { return x && y; }); }
BinaryOp lxor() { return typed<bool>("lxor", kCommAssoc, [](bool x, bool y) { return x != y; }); }

BinaryOp set_union() {
    return typed<SmallSet>("union", kCommAssoc, [](SmallSet x, SmallSet y) { return SmallSet{x.bits | y.bits}; });
}

BinaryOp set_intersect() {
    return typed<SmallSet>("intersect", kCommAssoc, [](SmallSet x, SmallSet y) { return SmallSet{x.bits & y.bits}; });
}

BinaryOp first(Domain d) {
    return BinaryOp("first", [d](const Scalar& a, const Scalar& b) -> Scalar {
        if (domain_of(a) != d || domain_of(b) != d) operand_mismatch("first", a, b);
        return a;
    }, Laws{false, true});
}

BinaryOp second(Domain d) {
    return BinaryOp("second", [d](const Scalar& a, const Scalar& b) -> Scalar {
        if (domain_of(a) != d || domain_of(b) != d) operand_mismatch("second", a, b);
        return b;
    }, Laws{false, true});
}

BinaryOp by_name(std::string_view name, Domain d) {
    if (name == "plus") return plus(d);
    if (name == "times") return times(d);
    if (name == "min") return min(d);
    if (name == "max") return max(d);
    if (name == "lor") return lor();
    if (name == "land") return land();
    if (name == "lxor") return lxor();
    if (name == "union") return set_union();
    if (name == "intersect") return set_intersect();
    if (name == "first") return first(d);
    if (name == "second") return second(d);
    throw ValueError("unknown binary operator '" + std::string(name) + "'");
}

}  // namespace ops

Semiring::Semiring(std::string name, Domain domain, BinaryOp add, BinaryOp mul, Scalar zero,
                   Scalar one, Membership membership, unsigned universe_size)
    : name_(std::move(name)),
      domain_(domain),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      membership_(std::move(membership)),
      universe_size_(universe_size) {
    if (domain_of(zero_) != domain_ || domain_of(one_) != domain_) {
        throw DomainMismatch("semiring '" + name_ + "': 0 and 1 must belong to the " +
                             std::string(to_string(domain_)) + " domain");
    }
    if (!contains(zero_) || !contains(one_)) {
        throw ValueError("semiring '" + name_ + "': 0 and 1 must be members of its value set");
    }
}

bool Semiring::contains(const Scalar& s) const {
    if (domain_of(s) != domain_) return false;
    return !membership_ || membership_(s);
}

Scalar Semiring::make(Scalar s) const {
    if (domain_of(s) != domain_) {
        throw DomainMismatch("value of domain " + std::string(to_string(domain_of(s))) +
                             " given to semiring '" + name_ + "' over " +
                             std::string(to_string(domain_)));
    }
    if (membership_ && !membership_(s)) {
        throw ValueError("value " + format_scalar(s) + " is outside the value set of semiring '" +
                         name_ + "'");
    }
    return s;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::string_view, 8> kNames = {
    "arith-real", "arith-natural", "max-plus", "min-plus",
    "max-min",    "min-max",       "xor-and",  "union-intersect",
};

Membership real_where(bool (*pred)(double)) {
    return [pred](const Scalar& s) {
        double v = std::get<double>(s);
        return !std::isnan(v) && pred(v);
    };
}

}  // namespace

std::span<const std::string_view> semiring_names() noexcept { return kNames; }

Semiring semiring_by_name(std::string_view name, std::optional<unsigned> universe_size,
                          OrderVariant variant) {
    const bool nonneg = variant == OrderVariant::non_negative;
    if (name == "arith-real") {
        return Semiring("arith-real", Domain::real, ops::plus(Domain::real), ops::times(Domain::real),
                        real(0.0), real(1.0), real_where([](double v) { return std::isfinite(v); }));
    }
    if (name == "arith-natural") {
        return Semiring("arith-natural", Domain::natural, ops::plus(Domain::natural),
                        ops::times(Domain::natural), natural(0), natural(1));
    }
    if (name == "max-plus") {
        return Semiring("max-plus", Domain::real, ops::max(Domain::real), ops::plus(Domain::real),
                        real(-kInf), real(0.0), real_where([](double v) { return v < kInf; }));
    }
    if (name == "min-plus") {
        return Semiring("min-plus", Domain::real, ops::min(Domain::real), ops::plus(Domain::real),
                        real(kInf), real(0.0), real_where([](double v) { return v > -kInf; }));
    }
    if (name == "max-min") {
        // [0, +inf] with 0 as the 0-element, or [-inf, 0] with -inf.
        if (nonneg) {
            return Semiring("max-min", Domain::real, ops::max(Domain::real), ops::min(Domain::real),
                            real(0.0), real(kInf), real_where([](double v) { return v >= 0; }));
        }
        return Semiring("max-min", Domain::real, ops::max(Domain::real), ops::min(Domain::real),
                        real(-kInf), real(0.0), real_where([](double v) { return v <= 0; }));
    }
    if (name == "min-max") {
        if (nonneg) {
            return Semiring("min-max", Domain::real, ops::min(Domain::real), ops::max(Domain::real),
                            real(kInf), real(0.0), real_where([](double v) { return v >= 0; }));
        }
        return Semiring("min-max", Domain::real, ops::min(Domain::real), ops::max(Domain::real),
                        real(0.0), real(-kInf), real_where([](double v) { return v <= 0; }));
    }
    if (name == "xor-and") {
        return Semiring("xor-and", Domain::boolean, ops::lxor(), ops::land(), boolean(false),
                        boolean(true));
    }
    if (name == "union-intersect") {
        if (!universe_size) throw ValueError("union-intersect requires a universe size");
        const SmallSet all = SmallSet::universe(*universe_size);
        return Semiring(
            "union-intersect", Domain::small_set, ops::set_union(), ops::set_intersect(),
            small_set(SmallSet{}), small_set(all),
            [all](const Scalar& s) { return (std::get<SmallSet>(s).bits & ~all.bits) == 0; },
            *universe_size);
    }
    throw ValueError("unknown semiring '" + std::string(name) + "'");
}

namespace {

void check_operands(const Semiring& sr, const Scalar& a, const Scalar& b) {
    if (domain_of(a) != sr.domain() || domain_of(b) != sr.domain()) {
        throw DomainMismatch("operands of domain " + std::string(to_string(domain_of(a))) + " and " +
                             std::string(to_string(domain_of(b))) + " given to semiring '" +
                             sr.name() + "' over " + std::string(to_string(sr.domain())));
    }
}

}  // namespace

Scalar scalar_add(const Semiring& sr, const Scalar& a, const Scalar& b) {
    check_operands(sr, a, b);
    return sr.add()(a, b);
}

Scalar scalar_mul(const Semiring& sr, const Scalar& a, const Scalar& b) {
    check_operands(sr, a, b);
    return sr.mul()(a, b);
}

Scalar random_scalar(const Semiring& sr, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 19);
    const int roll = pick(rng);
    if (roll == 0) return sr.zero();
    if (roll == 1) return sr.one();

    auto integral = [&rng](int lo, int hi) {
        return real(static_cast<double>(std::uniform_int_distribution<int>(lo, hi)(rng)));
    };
    const std::string& name = sr.name();
    if (name == "arith-real") return real(std::uniform_real_distribution<double>(-100.0, 100.0)(rng));
    if (name == "arith-natural") return natural(std::uniform_int_distribution<std::uint64_t>(0, 1U << 20)(rng));
    if (name == "max-plus" || name == "min-plus") return integral(-1000, 1000);
    if (name == "max-min" || name == "min-max") {
        return sr.contains(real(1.0)) ? integral(0, 1000) : integral(-1000, 0);
    }
    if (name == "xor-and") return boolean(std::bernoulli_distribution(0.5)(rng));
    if (name == "union-intersect") {
        const std::uint64_t all = std::get<SmallSet>(sr.one()).bits;
        return small_set(SmallSet{rng() & all});
    }
    throw ValueError("no default sampler for semiring '" + name + "'");
}

namespace {

double magnitude(const Scalar& s) {
    const double* v = std::get_if<double>(&s);
    return v != nullptr && std::isfinite(*v) ? std::fabs(*v) : 0.0;
}

}  // namespace

LawReport check_laws(const Semiring& sr, const Sampler& sampler, std::size_t trials,
                     std::uint64_t seed, LawTolerance tol) {
    std::mt19937_64 rng(seed);
    LawReport report;
    const bool approx = sr.domain() == Domain::real && sr.add().name() == "plus";
    const auto& add = sr.add();
    const auto& mul = sr.mul();
    const Scalar& zero = sr.zero();

    auto same = [&](const Scalar& x, const Scalar& y, double scale) {
        if (x == y) return true;
        if (!approx) return false;
        const double dx = std::get<double>(x);
        const double dy = std::get<double>(y);
        if (!std::isfinite(dx) || !std::isfinite(dy)) return false;
        return std::fabs(dx - dy) <= tol.real_arith_rel * scale;
    };

    for (std::size_t t = 0; t < trials; ++t) {
        const Scalar a = sampler(rng);
        const Scalar b = sampler(rng);
        const Scalar c = sampler(rng);
        const double ma = magnitude(a), mb = magnitude(b), mc = magnitude(c);
        ++report.trials;

        auto fail = [&](const char* law) {
            if (report.failures++ == 0) {
                std::ostringstream os;
                os << sr.name() << ": " << law << " fails for a=" << format_scalar(a)
                   << " b=" << format_scalar(b) << " c=" << format_scalar(c);
                report.first_failure = os.str();
            }
        };

        if (!same(add(a, b), add(b, a), 0)) fail("additive commutativity");
        if (!same(add(add(a, b), c), add(a, add(b, c)), ma + mb + mc)) fail("additive associativity");
        if (!same(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), ma * (mb + mc))) fail("distributivity");
        if (add(a, zero) != a || add(zero, a) != a) fail("additive identity");
        if (mul(a, zero) != zero || mul(zero, a) != zero) fail("multiplicative annihilator");
        if (mul.laws().commutative && !same(mul(a, b), mul(b, a), 0)) fail("multiplicative commutativity");
        if (mul.laws().associative && !same(mul(mul(a, b), c), mul(a, mul(b, c)), ma * mb * mc)) {
            fail("multiplicative associativity");
        }
    }
    return report;
}

Semiring make_semiring(std::string name, Domain domain, BinaryOp add, BinaryOp mul, Scalar zero,
                       Scalar one, Membership membership, const Sampler& sampler) {
    Semiring sr(std::move(name), domain, std::move(add), std::move(mul), zero, one,
                std::move(membership));
#ifdef GBCORE_CHECK_LAWS
    if (sampler) {
        const LawReport report = check_laws(sr, sampler, 1000, 0x5eed);
        if (!report.ok()) throw ValueError("semiring registration rejected: " + report.first_failure);
    }
#else
    (void)sampler;
#endif
    return sr;
}

}  // namespace gbcore
