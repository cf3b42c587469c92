#ifndef VLOGIC_REPORT_HPP
#define VLOGIC_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace vlogic {

struct identity_check {
    std::string name;
    double residual = 0;
    double tolerance = 0;

    // NaN residuals fail.
    bool pass() const noexcept { return residual < tolerance; }
};

/// Named max-norm residuals from a verification run.
class identity_report {
public:
    void add(std::string name, double residual, double tolerance) {
        checks_.push_back({std::move(name), residual, tolerance});
    }

    /// Keeps the worst residual when the same identity is checked repeatedly.
    void merge_max(const std::string& name, double residual, double tolerance) {
        auto it = std::find_if(checks_.begin(), checks_.end(),
                               [&](const identity_check& c) { return c.name == name; });
        if (it == checks_.end()) {
            add(name, residual, tolerance);
        } else if (std::isnan(residual) || residual > it->residual) {
            it->residual = residual;
        }
    }

    void append(const identity_report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<identity_check>& checks() const noexcept { return checks_; }

    const identity_check* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }

    double residual(const std::string& name) const {
        const auto* c = find(name);
        return c ? c->residual : NAN;
    }

    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(),
                           [](const identity_check& c) { return c.pass(); });
    }

private:
    std::vector<identity_check> checks_;
};

} // namespace vlogic

#endif // VLOGIC_REPORT_HPP
