/*
 * report.hpp
 * ----------
 * Check reports. A failed identity is an outcome, not an error: every checker
 * returns the full list of violated index tuples with their exact nonzero
 * defect coordinates so a failure can be re-verified by hand.
 */
#pragma once

#include <string>
#include <vector>

#include "loday/rational.hpp"

namespace loday {

struct Violation {
    std::string check;        // which identity / flag was violated
    std::vector<int> indices; // basis indices the defect is attached to (0-based)
    Vec defect;               // exact defect coordinates (layout depends on the check)
    std::string note;         // rendered form for defects with no fixed coordinate layout

    bool operator==(const Violation& o) const {
        return check == o.check && indices == o.indices && defect == o.defect && note == o.note;
    }
};

struct CheckReport {
    std::string name;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }

    void record(std::string check, std::vector<int> indices, Vec defect, std::string note = {}) {
        violations.push_back({std::move(check), std::move(indices), std::move(defect),
                              std::move(note)});
    }

    /// Merge a sub-report, keeping its violation records.
    void absorb(const CheckReport& sub) {
        violations.insert(violations.end(), sub.violations.begin(), sub.violations.end());
    }
};

}  // namespace loday
