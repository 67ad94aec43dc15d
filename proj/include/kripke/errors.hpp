#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kripke {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed frame / valuation / map input, or an algebra that is not closed.
class FormatError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class UnknownProperty : public Error {
public:
    using Error::Error;
};

class UnknownCheck : public Error {
public:
    using Error::Error;
};

class EmptyRestriction : public Error {
public:
    EmptyRestriction() : Error("restriction to the empty set") {}
};

class NotTense : public Error {
public:
    using Error::Error;
};

/// The requested enumeration needs more work than the configured budget allows.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget, const std::string& message);

    std::uint64_t needed() const noexcept { return needed_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

class CapExceeded : public Error {
public:
    CapExceeded(std::uint64_t last_size, std::uint64_t cap);

    std::uint64_t last_size() const noexcept { return last_size_; }

private:
    std::uint64_t last_size_;
};

class NotPretransitive : public Error {
public:
    using Error::Error;
};

class NotDefinable : public Error {
public:
    explicit NotDefinable(int world);

    int world() const noexcept { return world_; }

private:
    int world_;
};

}  // namespace kripke
