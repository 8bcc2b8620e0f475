#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mpres {

struct Check {
    std::string name;
    std::string subject;         ///< simplex label, skeleton name, or "-"
    std::string classification;  ///< iso/mono/epi/neither, or a short verdict
    std::vector<std::size_t> ranks;
    bool passed = false;

    bool operator==(const Check&) const = default;
};

/// Ordered list of named checks; passes iff every check passes.
struct VerificationReport {
    std::vector<Check> checks;

    bool passed() const noexcept;
    std::size_t failure_count() const noexcept;
    /// Checks named `name`, in report order.
    std::vector<Check> named(const std::string& name) const;
    std::vector<Check> failures() const;

    std::string to_text() const;

    bool operator==(const VerificationReport&) const = default;
};

}  // namespace mpres
