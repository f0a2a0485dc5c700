#pragma once

#include <string_view>

#include "ogm/errors.hpp"

namespace ogm {

/// Scalar value domain. Doubles throughout; +infinity is legal under MinSum.
using Value = double;

enum class SemiringId { MinSum, SumProd, MaxProd, OrAnd };

/// A commutative semi-ring (domain, combine, one, accumulate, zero).
///
/// combine is the operation factor values are composed with; accumulate is
/// the operation the inference problem folds with. Instances are immutable
/// values and safe to share between threads.
class Semiring {
public:
    constexpr explicit Semiring(SemiringId id) noexcept : id_(id) {}

    static constexpr Semiring min_sum() noexcept { return Semiring(SemiringId::MinSum); }
    static constexpr Semiring sum_prod() noexcept { return Semiring(SemiringId::SumProd); }
    static constexpr Semiring max_prod() noexcept { return Semiring(SemiringId::MaxProd); }
    static constexpr Semiring or_and() noexcept { return Semiring(SemiringId::OrAnd); }

    /// Lookup by the tag used in files and on the command line
    /// (minsum, sumprod, maxprod, orand). Throws NotFound otherwise.
    static Semiring by_name(std::string_view name);

    SemiringId id() const noexcept { return id_; }
    std::string_view name() const noexcept;

    Value one() const noexcept;
    Value zero() const noexcept;

    /// True when accumulate returns one of its arguments (min, max, or),
    /// which is what makes an optimizing labeling well-defined.
    bool selective() const noexcept;

    Value combine(Value a, Value b) const noexcept;
    Value accumulate(Value a, Value b) const noexcept;

    /// Strict accumulate-preference: true iff accumulate(incumbent, candidate)
    /// selects the candidate over the incumbent. Selective semirings only.
    bool improves(Value candidate, Value incumbent) const;

    /// Domain membership, including the NaN ban.
    bool valid(Value v) const noexcept;

    /// Throws InvalidValue if v is outside the domain.
    void validate(Value v) const;

    bool operator==(const Semiring& other) const noexcept { return id_ == other.id_; }

private:
    SemiringId id_;
};

} // namespace ogm
