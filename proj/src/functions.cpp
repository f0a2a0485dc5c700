#include "ogm/functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ogm {

std::string_view function_kind_name(FunctionKind kind) noexcept {
    switch (kind) {
        case FunctionKind::Explicit: return "explicit";
        case FunctionKind::Potts: return "potts";
        case FunctionKind::TruncatedAbsDiff: return "truncabsdiff";
        case FunctionKind::Sparse: return "sparse";
    }
    return "?";
}

FunctionKind function_kind_by_name(std::string_view name) {
    if (name == "explicit") return FunctionKind::Explicit;
    if (name == "potts") return FunctionKind::Potts;
    if (name == "truncabsdiff") return FunctionKind::TruncatedAbsDiff;
    if (name == "sparse") return FunctionKind::Sparse;
    throw NotFound("unknown function encoding '" + std::string(name) + "'");
}

Function::Function(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    if (shape_.empty()) {
        throw InvalidArgument("function shape must have at least one dimension");
    }
    for (std::size_t n : shape_) {
        if (n == 0) throw InvalidArgument("function shape entries must be positive");
    }
}

std::size_t Function::size() const noexcept {
    std::size_t n = 1;
    for (std::size_t s : shape_) n *= s;
    return n;
}

Value Function::operator()(std::span<const std::size_t> coords) const {
    if (coords.size() != shape_.size()) {
        throw IndexError("coordinate tuple has arity " + std::to_string(coords.size()) +
                         ", function has arity " + std::to_string(shape_.size()));
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] >= shape_[j]) {
            throw IndexError("coordinate " + std::to_string(coords[j]) +
                             " out of range for dimension " + std::to_string(j) +
                             " of size " + std::to_string(shape_[j]));
        }
    }
    return value_at(coords);
}

// --- ExplicitFunction ---

ExplicitFunction::ExplicitFunction(std::vector<std::size_t> shape, std::vector<Value> values)
    : Function(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != size()) {
        throw InvalidArgument("explicit table has " + std::to_string(values_.size()) +
                              " values, shape requires " + std::to_string(size()));
    }
}

Value ExplicitFunction::value_at(std::span<const std::size_t> coords) const {
    std::size_t index = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        index = index * shape_[j] + coords[j];
    }
    return values_[index];
}

void ExplicitFunction::validate_values(const Semiring& semiring) const {
    for (Value v : values_) semiring.validate(v);
}

// --- PottsFunction ---

PottsFunction::PottsFunction(std::size_t labels_first, std::size_t labels_second,
                             Value value_equal, Value value_unequal)
    : Function({labels_first, labels_second}),
      value_equal_(value_equal),
      value_unequal_(value_unequal) {
    if (std::isnan(value_equal) || std::isnan(value_unequal)) {
        throw InvalidValue("potts values must not be NaN");
    }
}

Value PottsFunction::value_at(std::span<const std::size_t> coords) const {
    return coords[0] == coords[1] ? value_equal_ : value_unequal_;
}

void PottsFunction::validate_values(const Semiring& semiring) const {
    semiring.validate(value_equal_);
    semiring.validate(value_unequal_);
}

// --- TruncatedAbsDiffFunction ---

TruncatedAbsDiffFunction::TruncatedAbsDiffFunction(std::size_t labels_first,
                                                   std::size_t labels_second,
                                                   Value weight, Value truncation)
    : Function({labels_first, labels_second}), weight_(weight), truncation_(truncation) {
    if (!(weight >= 0.0) || std::isnan(weight)) {
        throw InvalidValue("truncated-difference weight must be nonnegative");
    }
    if (!(truncation >= 0.0) || std::isnan(truncation)) {
        throw InvalidValue("truncation must be nonnegative");
    }
}

Value TruncatedAbsDiffFunction::value_at(std::span<const std::size_t> coords) const {
    const double diff = coords[0] >= coords[1] ? double(coords[0] - coords[1])
                                               : double(coords[1] - coords[0]);
    return std::min(truncation_, weight_ * diff);
}

void TruncatedAbsDiffFunction::validate_values(const Semiring& semiring) const {
    // The reachable values are min(truncation, weight*d) for the possible
    // coordinate distances d.
    const std::size_t max_d = std::max(shape_[0], shape_[1]) - 1;
    for (std::size_t d = 0; d <= max_d; ++d) {
        semiring.validate(std::min(truncation_, weight_ * double(d)));
    }
}

// --- SparseFunction ---

bool SparseFunction::CoordLess::operator()(std::span<const std::size_t> a,
                                           std::span<const std::size_t> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparseFunction::SparseFunction(std::vector<std::size_t> shape, Value default_value,
                               EntryMap entries)
    : Function(std::move(shape)), default_(default_value), entries_(std::move(entries)) {
    if (std::isnan(default_)) throw InvalidValue("sparse default must not be NaN");
    for (auto it = entries_.begin(); it != entries_.end();) {
        const auto& [coords, value] = *it;
        if (coords.size() != shape_.size()) {
            throw InvalidArgument("sparse entry arity does not match the shape");
        }
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] >= shape_[j]) {
                throw InvalidArgument("sparse entry coordinate out of range");
            }
        }
        if (std::isnan(value)) throw InvalidValue("sparse entry must not be NaN");
        // Canonical form: the default value is never stored.
        if (value == default_) {
            it = entries_.erase(it);
        } else {
            ++it;
        }
    }
}

Value SparseFunction::value_at(std::span<const std::size_t> coords) const {
    auto it = entries_.find(coords);
    return it == entries_.end() ? default_ : it->second;
}

void SparseFunction::validate_values(const Semiring& semiring) const {
    semiring.validate(default_);
    for (const auto& [coords, value] : entries_) semiring.validate(value);
}

// --- dense expansion ---

std::shared_ptr<const ExplicitFunction> to_explicit(const Function& f) {
    const auto& shape = f.shape();
    std::vector<Value> values;
    values.reserve(f.size());
    std::vector<std::size_t> coords(shape.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        values.push_back(f(coords));
        for (std::size_t j = shape.size(); j-- > 0;) {
            if (++coords[j] < shape[j]) break;
            coords[j] = 0;
        }
    }
    return std::make_shared<ExplicitFunction>(shape, std::move(values));
}

} // namespace ogm
