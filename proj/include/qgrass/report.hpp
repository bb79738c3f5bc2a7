#ifndef QGRASS_REPORT_HPP
#define QGRASS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace qgrass
{

struct check_result {
    std::string name;
    bool pass = true;
    std::string witness; // empty when passing
};

// Outcome of a batch of named checks. Diagnostics record literal readings that are
// reported but do not decide the verdict.
struct relation_report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<check_result> relations;
    std::vector<check_result> diagnostics;
    std::vector<std::string> notes;

    void add(check_result r) { relations.push_back(std::move(r)); }
    void add_diagnostic(check_result r) { diagnostics.push_back(std::move(r)); }
    bool all_pass() const
    {
        for (const auto &r : relations) {
            if (!r.pass) {
                return false;
            }
        }
        return true;
    }
    const check_result *find(const std::string &name) const
    {
        for (const auto &r : relations) {
            if (r.name == name) {
                return &r;
            }
        }
        for (const auto &r : diagnostics) {
            if (r.name == name) {
                return &r;
            }
        }
        return nullptr;
    }
};

} // namespace qgrass

#endif
