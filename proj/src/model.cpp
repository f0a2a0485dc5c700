#include "ogm/model.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace ogm {

LabelSpace::LabelSpace(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
    for (std::size_t c : counts_) {
        if (c == 0) throw InvalidArgument("every variable needs at least one label");
    }
}

LabelSpace::LabelSpace(std::size_t num_variables, std::size_t num_labels)
    : LabelSpace(std::vector<std::size_t>(num_variables, num_labels)) {}

std::size_t LabelSpace::labels(std::size_t v) const {
    if (v >= counts_.size()) {
        throw IndexError("variable " + std::to_string(v) + " out of range");
    }
    return counts_[v];
}

GraphicalModel::GraphicalModel(LabelSpace space, Semiring semiring)
    : space_(std::move(space)), semiring_(semiring), adjacency_(space_.size()) {
    if (space_.size() == 0) {
        throw InvalidArgument("label space is empty; use GraphicalModel::empty for "
                              "a model over zero variables");
    }
}

GraphicalModel GraphicalModel::empty(Semiring semiring) {
    GraphicalModel m;
    m.semiring_ = semiring;
    return m;
}

FunctionId GraphicalModel::add_function(FunctionPtr function) {
    if (!function) throw InvalidArgument("null function");
    function->validate_values(semiring_);
    FunctionId fid{functions_.size(), function->shape()};
    functions_.push_back(std::move(function));
    ++version_;
    return fid;
}

std::size_t GraphicalModel::add_factor(const FunctionId& fid, std::vector<std::size_t> variables) {
    return add_factor(fid.index, std::move(variables));
}

std::size_t GraphicalModel::add_factor(std::size_t function_index,
                                       std::vector<std::size_t> variables) {
    if (function_index >= functions_.size()) {
        throw NotFound("function id " + std::to_string(function_index) + " is not registered");
    }
    const Function& f = *functions_[function_index];
    if (variables.size() != f.arity()) {
        throw InvalidArgument("factor connects " + std::to_string(variables.size()) +
                              " variables, function has arity " + std::to_string(f.arity()));
    }
    for (std::size_t j = 0; j < variables.size(); ++j) {
        if (variables[j] >= space_.size()) {
            throw IndexError("factor variable " + std::to_string(variables[j]) + " out of range");
        }
        // Ascending order is semantic: it fixes which axis of the function a
        // variable feeds. Silently sorting would reorder the arguments.
        if (j > 0 && variables[j] <= variables[j - 1]) {
            throw InvalidArgument("factor variables must be strictly ascending");
        }
        if (space_.labels(variables[j]) != f.shape()[j]) {
            throw ShapeMismatch("variable " + std::to_string(variables[j]) + " has " +
                                std::to_string(space_.labels(variables[j])) +
                                " labels but position " + std::to_string(j) +
                                " of the function has " + std::to_string(f.shape()[j]));
        }
    }
    const std::size_t index = factors_.size();
    for (std::size_t v : variables) adjacency_[v].push_back(index);
    factors_.push_back(Factor{function_index, std::move(variables)});
    ++version_;
    return index;
}

const Function& GraphicalModel::function(std::size_t index) const {
    if (index >= functions_.size()) {
        throw NotFound("function id " + std::to_string(index) + " is not registered");
    }
    return *functions_[index];
}

FunctionPtr GraphicalModel::function_ptr(std::size_t index) const {
    if (index >= functions_.size()) {
        throw NotFound("function id " + std::to_string(index) + " is not registered");
    }
    return functions_[index];
}

FunctionId GraphicalModel::function_id(std::size_t index) const {
    return FunctionId{index, function(index).shape()};
}

const Factor& GraphicalModel::factor(std::size_t index) const {
    if (index >= factors_.size()) {
        throw IndexError("factor " + std::to_string(index) + " out of range");
    }
    return factors_[index];
}

const std::vector<std::size_t>& GraphicalModel::factors_of(std::size_t v) const {
    if (v >= adjacency_.size()) {
        throw IndexError("variable " + std::to_string(v) + " out of range");
    }
    return adjacency_[v];
}

namespace {
// Gather scratch that avoids the heap for the common small arities.
constexpr std::size_t kStackArity = 16;
}

Value GraphicalModel::evaluate_factor(std::size_t factor_index,
                                      std::span<const std::size_t> x) const {
    const Factor& fac = factor(factor_index);
    const Function& f = *functions_[fac.function];
    std::array<std::size_t, kStackArity> small;
    std::vector<std::size_t> big;
    std::span<std::size_t> coords;
    if (fac.variables.size() <= kStackArity) {
        coords = std::span<std::size_t>(small.data(), fac.variables.size());
    } else {
        big.resize(fac.variables.size());
        coords = big;
    }
    for (std::size_t j = 0; j < fac.variables.size(); ++j) {
        coords[j] = x[fac.variables[j]];
    }
    return f(coords);
}

Value GraphicalModel::evaluate(std::span<const std::size_t> x) const {
    check_labeling(x);
    Value acc = semiring_.one();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        acc = semiring_.combine(acc, evaluate_factor(i, x));
    }
    return acc;
}

void GraphicalModel::check_labeling(std::span<const std::size_t> x) const {
    if (x.size() != space_.size()) {
        throw IndexError("labeling has " + std::to_string(x.size()) + " entries, model has " +
                         std::to_string(space_.size()) + " variables");
    }
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (x[v] >= space_.counts()[v]) {
            throw IndexError("label " + std::to_string(x[v]) + " out of range for variable " +
                             std::to_string(v));
        }
    }
}

StorageStats GraphicalModel::stats() const noexcept {
    StorageStats s;
    s.num_variables = space_.size();
    s.num_factors = factors_.size();
    s.num_functions = functions_.size();
    for (const auto& f : functions_) s.num_stored_values += f->stored_values();
    return s;
}

std::size_t GraphicalModel::counterfactual_dense_values() const noexcept {
    std::size_t total = 0;
    for (const Factor& fac : factors_) total += functions_[fac.function]->size();
    return total;
}

void GraphicalModel::add_extension_record(std::string line) {
    extensions_.push_back(std::move(line));
    ++version_;
}

std::vector<std::vector<std::size_t>> variable_adjacency(const GraphicalModel& m) {
    std::vector<std::vector<std::size_t>> adj(m.num_variables());
    for (const Factor& fac : m.factors()) {
        for (std::size_t a : fac.variables) {
            for (std::size_t b : fac.variables) {
                if (a != b) adj[a].push_back(b);
            }
        }
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

} // namespace ogm
