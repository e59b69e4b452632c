#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dskit {

/// Malformed or out-of-contract input. `pointer` is a JSON pointer to the
/// offending field when the input came from a document, empty otherwise.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::string pointer = {})
        : std::runtime_error(what), pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// An exhaustive search ran out of its node budget before deciding.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t budget)
        : std::runtime_error(what), budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// A matrix whose characteristic polynomial does not split over Q(i).
class NotInScalarField : public InputError {
public:
    using InputError::InputError;
};

}  // namespace dskit
