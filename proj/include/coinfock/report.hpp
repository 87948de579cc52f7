#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace coinfock {

inline constexpr const char* kVersion = "0.1.0";

/// One verification check: residual against its bound, tagged with the
/// formula it exercises.
struct Check {
    std::string name;
    std::string anchor;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;

    static Check of(std::string name, std::string anchor, double residual, double bound)
    {
        Check c;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.residual = residual;
        c.bound = bound;
        c.pass = residual <= bound;
        return c;
    }
};

struct Report {
    std::uint64_t seed = 0;
    nlohmann::json params;
    std::vector<Check> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const
    {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    bool all_pass() const { return passed() == total(); }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["meta"]["version"] = kVersion;
        j["meta"]["seed"] = seed;
        j["meta"]["params"] = params;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e;
            e["name"] = c.name;
            e["paper_anchor"] = c.anchor;
            e["residual"] = c.residual;
            e["bound"] = c.bound;
            e["pass"] = c.pass;
            j["checks"].push_back(e);
        }
        j["summary"]["total"] = total();
        j["summary"]["passed"] = passed();
        return j;
    }

    void write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

    void write_csv(std::ostream& os) const
    {
        os << "name,paper_anchor,residual,bound,pass\n";
        for (const auto& c : checks)
            os << c.name << ',' << c.anchor << ',' << c.residual << ',' << c.bound << ','
               << (c.pass ? "true" : "false") << '\n';
    }
};

}  // namespace coinfock
