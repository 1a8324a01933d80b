#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace opencat {

struct Violation {
    std::string rule;    // e.g. "right-identity", "naturality"
    std::string detail;  // witnessing objects/arrows/elements
};

/// Result of a validator. Empty means valid.
class Report {
public:
    void add(std::string rule, std::string detail);

    /// Appends every violation of `other`, prefixing details with `context`.
    void merge(const Report& other, std::string_view context = {});

    bool ok() const noexcept { return violations_.empty(); }
    explicit operator bool() const noexcept { return ok(); }

    bool has(std::string_view rule) const;
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

std::ostream& operator<<(std::ostream& os, const Report& report);

}  // namespace opencat
