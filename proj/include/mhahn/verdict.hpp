#ifndef MHAHN_VERDICT_HPP
#define MHAHN_VERDICT_HPP

#include <string>
#include <vector>

namespace mhahn {

// One named exact check. detail is empty on success and carries the
// offending indices or residual description on failure.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    std::string summary() const {
        if (pass()) return "all checks passed";
        const Check* f = first_failure();
        return f->name + (f->detail.empty() ? "" : (": " + f->detail));
    }
};

// Throws E with the first failing check's description when the report fails.
template <typename E>
void require(const Report& r) {
    if (!r.pass()) throw E(r.summary());
}

} // namespace mhahn

#endif
