#include "kripke/errors.hpp"

#include <utility>

namespace kripke {

namespace {

std::string syntax_message(std::size_t offset, const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) + ": found '" + found + "'";
    if (!expected.empty()) {
        msg += ", expected one of:";
        for (const auto& e : expected) msg += " '" + e + "'";
    }
    return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(syntax_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : Error("budget exceeded: needs " + std::to_string(needed) + ", budget " + std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget, const std::string& message)
    : Error(message), needed_(needed), budget_(budget) {}

CapExceeded::CapExceeded(std::uint64_t last_size, std::uint64_t cap)
    : Error("cap exceeded: reached " + std::to_string(last_size) + " elements, cap " + std::to_string(cap)),
      last_size_(last_size) {}

NotDefinable::NotDefinable(int world)
    : Error("world " + std::to_string(world) + " is not definable"), world_(world) {}

}  // namespace kripke
