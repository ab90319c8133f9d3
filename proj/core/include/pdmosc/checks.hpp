#pragma once

#include <string>
#include <vector>

namespace pdmosc {

// Measured figure against its tolerance. Yes/no checks report 0 (holds) or 1.
struct Check {
    std::string name;
    double value;
    double tol;
    bool pass() const { return value <= tol; }
};

struct CriterionReport {
    int id;
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // measured but not gated
    double seconds = 0.0;
    bool passed() const;
};

// Ids 1..10 with their short titles.
std::vector<std::pair<int, std::string>> criteria();

// Runs one criterion. Exceptions become a failing check named after the message.
CriterionReport run_criterion(int id);

// "all", "spectrum", "susy", "coherent", "classical", "dynamics", "figures".
// Throws DomainError for anything else.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<std::string> suite_names();

} // namespace pdmosc
