// Outcome of a batch verification: worst error seen, how many comparisons
// ran, and a description of each failure.
#pragma once

#include <string>
#include <vector>

namespace coneopp {

struct CheckReport {
    bool pass = true;
    double max_error = 0.0;
    int checks = 0;
    std::vector<std::string> failures;

    void record(double err, double tol, const std::string& what) {
        if (err > max_error) max_error = err;
        ++checks;
        if (!(err <= tol)) {
            pass = false;
            failures.push_back(what + ": error " + std::to_string(err));
        }
    }
};

} // namespace coneopp
