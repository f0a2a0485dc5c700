#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ogm/functions.hpp"
#include "ogm/semiring.hpp"

namespace ogm {

/// One label index per variable.
using Labeling = std::vector<std::size_t>;

/// Per-variable label counts; variables are implicitly 0..size()-1.
class LabelSpace {
public:
    LabelSpace() = default;
    explicit LabelSpace(std::vector<std::size_t> counts);

    /// Uniform space: count variables, each with the same number of labels.
    LabelSpace(std::size_t num_variables, std::size_t num_labels);

    std::size_t size() const noexcept { return counts_.size(); }
    std::size_t labels(std::size_t v) const;
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

private:
    std::vector<std::size_t> counts_;
};

/// Handle to a registered function: index into the registry plus the
/// label-count signature factors are checked against.
struct FunctionId {
    std::size_t index = 0;
    std::vector<std::size_t> shape;

    std::size_t arity() const noexcept { return shape.size(); }
};

/// A factor: a function id plus the strictly ascending variables it connects.
struct Factor {
    std::size_t function = 0;
    std::vector<std::size_t> variables;
};

struct StorageStats {
    std::size_t num_variables = 0;
    std::size_t num_factors = 0;
    std::size_t num_functions = 0;
    std::size_t num_stored_values = 0;
};

/// A discrete graphical model: label space, shared function registry, factor
/// list, and the semiring the factor values live in.
///
/// Construction is single-threaded and append-only. Once inference engines
/// are attached the model must not be mutated; engines detect mutation via
/// the version counter. All read operations are safe to call concurrently.
class GraphicalModel {
public:
    GraphicalModel(LabelSpace space, Semiring semiring);

    /// A model over zero variables. The regular constructor rejects an empty
    /// label space to catch accidental empties; files and tests still need
    /// the degenerate model, so it has a named path.
    static GraphicalModel empty(Semiring semiring);

    const LabelSpace& space() const noexcept { return space_; }
    const Semiring& semiring() const noexcept { return semiring_; }
    std::size_t num_variables() const noexcept { return space_.size(); }
    std::size_t num_labels(std::size_t v) const { return space_.labels(v); }
    std::size_t num_functions() const noexcept { return functions_.size(); }
    std::size_t num_factors() const noexcept { return factors_.size(); }

    /// Registers a function and returns its fresh id. Values are validated
    /// against the model's semiring domain.
    FunctionId add_function(FunctionPtr function);

    /// Appends a factor connecting the given strictly ascending variables.
    /// The function shape must match the variables' label counts.
    std::size_t add_factor(const FunctionId& fid, std::vector<std::size_t> variables);
    std::size_t add_factor(std::size_t function_index, std::vector<std::size_t> variables);

    const Function& function(std::size_t index) const;
    FunctionPtr function_ptr(std::size_t index) const;
    FunctionId function_id(std::size_t index) const;
    const Factor& factor(std::size_t index) const;
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    /// Indices of the factors depending on variable v.
    const std::vector<std::size_t>& factors_of(std::size_t v) const;

    /// Evaluates one factor at the labels the labeling assigns to its
    /// variables.
    Value evaluate_factor(std::size_t factor_index, std::span<const std::size_t> x) const;

    /// The induced function: combine of all factor values at x.
    Value evaluate(std::span<const std::size_t> x) const;

    /// Throws IndexError unless x is a valid labeling for the space.
    void check_labeling(std::span<const std::size_t> x) const;

    StorageStats stats() const noexcept;

    /// Total table entries a dense per-factor representation would store;
    /// the denominator of the function-sharing economy.
    std::size_t counterfactual_dense_values() const noexcept;

    /// Incremented by every mutation; engines use it to detect a model that
    /// changed under them.
    std::uint64_t version() const noexcept { return version_; }

    /// Opaque records the file format preserves across load/save.
    const std::vector<std::string>& extension_records() const noexcept { return extensions_; }
    void add_extension_record(std::string line);

private:
    GraphicalModel() = default;

    LabelSpace space_;
    Semiring semiring_ = Semiring::min_sum();
    std::vector<FunctionPtr> functions_;
    std::vector<Factor> factors_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::string> extensions_;
    std::uint64_t version_ = 0;
};

/// Variable adjacency derived from factor co-occurrence: two variables are
/// adjacent iff some factor depends on both.
std::vector<std::vector<std::size_t>> variable_adjacency(const GraphicalModel& m);

} // namespace ogm
