#include "ogm/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ogm {

namespace {
constexpr Value kInf = std::numeric_limits<Value>::infinity();
}

Semiring Semiring::by_name(std::string_view name) {
    if (name == "minsum") return min_sum();
    if (name == "sumprod") return sum_prod();
    if (name == "maxprod") return max_prod();
    if (name == "orand") return or_and();
    throw NotFound("unknown semiring '" + std::string(name) + "'");
}

std::string_view Semiring::name() const noexcept {
    switch (id_) {
        case SemiringId::MinSum: return "minsum";
        case SemiringId::SumProd: return "sumprod";
        case SemiringId::MaxProd: return "maxprod";
        case SemiringId::OrAnd: return "orand";
    }
    return "?";
}

Value Semiring::one() const noexcept {
    switch (id_) {
        case SemiringId::MinSum: return 0.0;
        case SemiringId::SumProd:
        case SemiringId::MaxProd:
        case SemiringId::OrAnd: return 1.0;
    }
    return 0.0;
}

Value Semiring::zero() const noexcept {
    switch (id_) {
        case SemiringId::MinSum: return kInf;
        case SemiringId::SumProd:
        case SemiringId::MaxProd:
        case SemiringId::OrAnd: return 0.0;
    }
    return 0.0;
}

bool Semiring::selective() const noexcept {
    return id_ != SemiringId::SumProd;
}

Value Semiring::combine(Value a, Value b) const noexcept {
    if (id_ == SemiringId::MinSum) return a + b;
    return a * b;
}

Value Semiring::accumulate(Value a, Value b) const noexcept {
    switch (id_) {
        case SemiringId::MinSum: return std::min(a, b);
        case SemiringId::SumProd: return a + b;
        case SemiringId::MaxProd:
        case SemiringId::OrAnd: return std::max(a, b);
    }
    return a;
}

bool Semiring::improves(Value candidate, Value incumbent) const {
    switch (id_) {
        case SemiringId::MinSum: return candidate < incumbent;
        case SemiringId::MaxProd:
        case SemiringId::OrAnd: return candidate > incumbent;
        case SemiringId::SumProd:
            throw UnsupportedCombination("sumprod accumulation is not selective");
    }
    return false;
}

bool Semiring::valid(Value v) const noexcept {
    if (std::isnan(v)) return false;
    switch (id_) {
        case SemiringId::MinSum:
            // Finite reals plus +infinity for hard constraints.
            return v != -kInf;
        case SemiringId::SumProd:
        case SemiringId::MaxProd:
            return v >= 0.0 && v != kInf;
        case SemiringId::OrAnd:
            return v == 0.0 || v == 1.0;
    }
    return false;
}

void Semiring::validate(Value v) const {
    if (!valid(v)) {
        throw InvalidValue("value " + std::to_string(v) + " is outside the " +
                           std::string(name()) + " domain");
    }
}

} // namespace ogm
