#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdqc {

// Argument outside the mathematical domain of an operation (even code
// distance, non-positive improvement factor, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Configuration could not be parsed or failed validation. `field` names the
// offending dotted path when one is known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Requested row is not present in an embedded dataset.
class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A chain would hold more ions than the node capacity allows.
class CapacityError : public std::runtime_error {
public:
    CapacityError(std::size_t chain, std::size_t occupancy, std::size_t capacity)
        : std::runtime_error("chain " + std::to_string(chain + 1) + " holds " + std::to_string(occupancy) +
                             " ions, exceeding capacity " + std::to_string(capacity)),
          chain_(chain) {}

    std::size_t chain() const noexcept { return chain_; }

private:
    std::size_t chain_;
};

} // namespace sdqc
