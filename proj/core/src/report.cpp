#include "mpres/report.hpp"

#include <algorithm>
#include <sstream>

namespace mpres {

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::failure_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::vector<Check> VerificationReport::named(const std::string& name) const {
    std::vector<Check> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [&name](const Check& c) { return c.name == name; });
    return out;
}

std::vector<Check> VerificationReport::failures() const {
    std::vector<Check> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
    return out;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const Check& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.subject << ' ' << c.classification;
        if (!c.ranks.empty()) {
            os << " ranks=";
            for (std::size_t i = 0; i < c.ranks.size(); ++i) {
                os << (i ? "," : "") << c.ranks[i];
            }
        }
        os << '\n';
    }
    os << (passed() ? "all " + std::to_string(checks.size()) + " checks passed"
                    : std::to_string(failure_count()) + " of " + std::to_string(checks.size()) + " checks failed")
       << '\n';
    return os.str();
}

}  // namespace mpres
