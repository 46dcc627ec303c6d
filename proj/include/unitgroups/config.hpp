#pragma once

// Resource limits shared by the enumeration code.  All values can be
// overridden from the CLI or a key=value config file; exceeding a limit
// raises bound_error, never a silent truncation.

#include "unitgroups/ints.hpp"

#include <fstream>
#include <sstream>

namespace unitgroups {

struct Bounds {
    i64 oracle_size = i64(1) << 20;      // max elements enumerated per ring
    int an_index = 6;                    // max A_n index
    i64 density_limit = 100000000;       // max N for density scans
    i64 group_order_limit = i64(1) << 16;  // max |G| in splitting searches
    i64 reduced_search_limit = i64(1) << 16;  // max |G| for the reduced classifier

    static Bounds defaults() { return Bounds{}; }

    void set(const std::string& key, const std::string& value) {
        i64 v = std::stoll(value);
        if (key == "oracle_size_bound") oracle_size = v;
        else if (key == "an_index_bound") an_index = static_cast<int>(v);
        else if (key == "density_limit") density_limit = v;
        else if (key == "group_order_limit") group_order_limit = v;
        else if (key == "reduced_search_bound") reduced_search_limit = v;
        else throw std::invalid_argument("unknown config key: " + key);
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::string trimmed;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
            if (trimmed.empty()) continue;
            auto eq = trimmed.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config lines must be key=value: " + line);
            set(trimmed.substr(0, eq), trimmed.substr(eq + 1));
        }
    }
};

} // namespace unitgroups
