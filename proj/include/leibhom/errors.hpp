#pragma once

#include <stdexcept>
#include <string>

namespace leibhom {

/// Malformed user input: bad files, unknown names, inconsistent dimensions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured size limits.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal self-check failed (an identity that must hold did not).
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size limits shared by every module. Word counts bound the number of
/// columns of any dense matrix that gets built.
struct Limits {
    std::size_t max_columns = 20000;
    std::size_t max_degree = 7;
    std::size_t max_basis = 4096;
    std::size_t max_permutation_degree = 6;
};

} // namespace leibhom
