#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "ogm/errors.hpp"
#include "ogm/semiring.hpp"

namespace ogm {

enum class FunctionKind { Explicit, Potts, TruncatedAbsDiff, Sparse };

std::string_view function_kind_name(FunctionKind kind) noexcept;
FunctionKind function_kind_by_name(std::string_view name);

/// A function over label tuples. The four concrete encodings below share this
/// evaluation contract; replacing one encoding by another with equal values
/// must never change any evaluated result.
class Function {
public:
    virtual ~Function() = default;

    const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    std::size_t arity() const noexcept { return shape_.size(); }

    /// Number of entries of the dense value table this encoding represents.
    std::size_t size() const noexcept;

    /// Evaluate at a coordinate tuple. Throws IndexError when a coordinate is
    /// out of range.
    Value operator()(std::span<const std::size_t> coords) const;

    virtual FunctionKind kind() const noexcept = 0;

    /// Number of scalars this encoding stores.
    virtual std::size_t stored_values() const noexcept = 0;

    /// Throws InvalidValue if any value the encoding can produce lies outside
    /// the semiring's domain.
    virtual void validate_values(const Semiring& semiring) const = 0;

protected:
    explicit Function(std::vector<std::size_t> shape);

    virtual Value value_at(std::span<const std::size_t> coords) const = 0;

    std::vector<std::size_t> shape_;
};

using FunctionPtr = std::shared_ptr<const Function>;

/// Dense value table in row-major order (last coordinate fastest).
class ExplicitFunction final : public Function {
public:
    ExplicitFunction(std::vector<std::size_t> shape, std::vector<Value> values);

    const std::vector<Value>& values() const noexcept { return values_; }

    FunctionKind kind() const noexcept override { return FunctionKind::Explicit; }
    std::size_t stored_values() const noexcept override { return values_.size(); }
    void validate_values(const Semiring& semiring) const override;

protected:
    Value value_at(std::span<const std::size_t> coords) const override;

private:
    std::vector<Value> values_;
};

/// Second-order label-identity function: value_equal on the diagonal,
/// value_unequal off it.
class PottsFunction final : public Function {
public:
    PottsFunction(std::size_t labels_first, std::size_t labels_second,
                  Value value_equal, Value value_unequal);

    Value value_equal() const noexcept { return value_equal_; }
    Value value_unequal() const noexcept { return value_unequal_; }

    FunctionKind kind() const noexcept override { return FunctionKind::Potts; }
    std::size_t stored_values() const noexcept override { return 2; }
    void validate_values(const Semiring& semiring) const override;

protected:
    Value value_at(std::span<const std::size_t> coords) const override;

private:
    Value value_equal_;
    Value value_unequal_;
};

/// Truncated linear metric: min(truncation, weight * |x - y|).
class TruncatedAbsDiffFunction final : public Function {
public:
    TruncatedAbsDiffFunction(std::size_t labels_first, std::size_t labels_second,
                             Value weight, Value truncation);

    Value weight() const noexcept { return weight_; }
    Value truncation() const noexcept { return truncation_; }

    FunctionKind kind() const noexcept override { return FunctionKind::TruncatedAbsDiff; }
    std::size_t stored_values() const noexcept override { return 2; }
    void validate_values(const Semiring& semiring) const override;

protected:
    Value value_at(std::span<const std::size_t> coords) const override;

private:
    Value weight_;
    Value truncation_;
};

/// Default value plus explicit exceptions. Canonical form: entries equal to
/// the default are dropped at construction.
class SparseFunction final : public Function {
public:
    struct CoordLess {
        using is_transparent = void;
        bool operator()(std::span<const std::size_t> a, std::span<const std::size_t> b) const;
    };
    using EntryMap = std::map<std::vector<std::size_t>, Value, CoordLess>;

    SparseFunction(std::vector<std::size_t> shape, Value default_value, EntryMap entries);

    Value default_value() const noexcept { return default_; }
    const EntryMap& entries() const noexcept { return entries_; }

    FunctionKind kind() const noexcept override { return FunctionKind::Sparse; }
    std::size_t stored_values() const noexcept override { return 1 + entries_.size(); }
    void validate_values(const Semiring& semiring) const override;

protected:
    Value value_at(std::span<const std::size_t> coords) const override;

private:
    Value default_;
    EntryMap entries_;
};

/// Dense expansion of any encoding; evaluates identically everywhere.
std::shared_ptr<const ExplicitFunction> to_explicit(const Function& f);

} // namespace ogm
