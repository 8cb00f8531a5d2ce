#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "gbcore/scalar.hpp"

namespace gbcore {

struct Laws {
    bool commutative = false;
    bool associative = false;
};

/// A named binary operator on scalars. Operands of the wrong domain raise
/// DomainMismatch; natural and integer overflow raise OverflowError.
class BinaryOp {
public:
    using Fn = std::function<Scalar(const Scalar&, const Scalar&)>;

    BinaryOp(std::string name, Fn fn, Laws laws = {});

    Scalar operator()(const Scalar& a, const Scalar& b) const { return fn_(a, b); }

    const std::string& name() const noexcept { return name_; }
    Laws laws() const noexcept { return laws_; }

private:
    std::string name_;
    Fn fn_;
    Laws laws_;
};

namespace ops {

BinaryOp plus(Domain d);
BinaryOp times(Domain d);
BinaryOp min(Domain d);
BinaryOp max(Domain d);
BinaryOp lor();
BinaryOp land();
BinaryOp lxor();
BinaryOp set_union();
BinaryOp set_intersect();
/// Returns the left operand. Associative, not commutative.
BinaryOp first(Domain d);
BinaryOp second(Domain d);

/// Looks up plus, times, min, max, lor, land, lxor, union, intersect,
/// first, second. Throws ValueError for anything else.
BinaryOp by_name(std::string_view name, Domain d);

}  // namespace ops

/// Which half-line the max-min / min-max semirings live on.
enum class OrderVariant { non_negative, non_positive };

using Membership = std::function<bool(const Scalar&)>;
using Sampler = std::function<Scalar(std::mt19937_64&)>;

/// (add, mul, zero) over one scalar domain. `one` is the multiplicative
/// identity, used for selection matrices and unweighted incidence entries.
/// Immutable once constructed.
class Semiring {
public:
    Semiring(std::string name, Domain domain, BinaryOp add, BinaryOp mul, Scalar zero, Scalar one,
             Membership membership = {}, unsigned universe_size = 0);

    const std::string& name() const noexcept { return name_; }
    Domain domain() const noexcept { return domain_; }
    const BinaryOp& add() const noexcept { return add_; }
    const BinaryOp& mul() const noexcept { return mul_; }
    const Scalar& zero() const noexcept { return zero_; }
    const Scalar& one() const noexcept { return one_; }
    unsigned universe_size() const noexcept { return universe_size_; }

    bool contains(const Scalar& s) const;
    bool is_zero(const Scalar& s) const { return s == zero_; }

    /// Validates membership in the semiring's value set and returns `s`.
    /// Throws DomainMismatch for the wrong domain, ValueError otherwise.
    Scalar make(Scalar s) const;

private:
    std::string name_;
    Domain domain_;
    BinaryOp add_;
    BinaryOp mul_;
    Scalar zero_;
    Scalar one_;
    Membership membership_;
    unsigned universe_size_;
};

/// Identifiers accepted by semiring_by_name, in documentation order.
std::span<const std::string_view> semiring_names() noexcept;

/// Named semirings: arith-real, arith-natural, max-plus, min-plus, max-min,
/// min-max, xor-and, union-intersect. `universe_size` (1..64) is required for
/// union-intersect and ignored otherwise. `variant` selects the half-line for
/// max-min and min-max.
Semiring semiring_by_name(std::string_view name, std::optional<unsigned> universe_size = {},
                          OrderVariant variant = OrderVariant::non_negative);

Scalar scalar_add(const Semiring& sr, const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Semiring& sr, const Scalar& a, const Scalar& b);

/// Draws a member of a named semiring's value set, including the 0 and 1
/// elements with small probability. Tropical values are integral so that
/// sums of a few terms are exact.
Scalar random_scalar(const Semiring& sr, std::mt19937_64& rng);

struct LawReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
};

/// Tolerance for reassociation in the real arithmetic semiring: two results
/// agree when |x - y| <= rel * (sum of the magnitudes of the summed terms).
struct LawTolerance {
    double real_arith_rel = 1e-12;
};

/// Checks a (+) b = b (+) a, associativity of (+), distributivity of (x) over
/// (+), a (+) 0 = a, a (x) 0 = 0, and any laws (x) declares, on `trials`
/// random triples drawn from `sampler`.
LawReport check_laws(const Semiring& sr, const Sampler& sampler, std::size_t trials,
                     std::uint64_t seed, LawTolerance tol = {});

/// Builds a user-defined semiring. When law checking is compiled in
/// (GBCORE_CHECK_LAWS) and a sampler is given, the declared laws are
/// property-tested and ValueError is thrown on the first violation.
Semiring make_semiring(std::string name, Domain domain, BinaryOp add, BinaryOp mul, Scalar zero,
                       Scalar one, Membership membership = {}, const Sampler& sampler = {});

}  // namespace gbcore
