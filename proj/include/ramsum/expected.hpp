#pragma once

// Parser for the embedded reference-value corpus (data/expected_values.txt).

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "partition.hpp"
#include "ramsum/expected_values_data.hpp"

namespace ramsum {

struct ExpectedValues {
    /// (n, u) -> every nonzero Schur term of R_{n,u}.
    std::map<std::pair<int, unsigned>, std::map<Partition, BigInt, ReverseLex>> schur;
    /// (n, u) -> (k, coefficient of l_n^{(k)}).
    std::map<std::pair<int, unsigned>, std::map<Int, BigInt>> ell;
    /// (n, u) -> published positivity verdict.
    std::map<std::pair<int, unsigned>, bool> table;

    [[nodiscard]] std::vector<int> table_columns() const {
        std::vector<int> ns;
        for (const auto& [key, v] : table)
            if (ns.empty() || ns.back() != key.first) ns.push_back(key.first);
        return ns;
    }
};

inline ExpectedValues parse_expected_values(std::string_view text) {
    ExpectedValues out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw domain_error("expected values, line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag == "schur") {
            int n = 0;
            unsigned u = 0;
            std::string coeff;
            if (!(fields >> n >> u >> coeff)) fail("malformed schur line");
            std::vector<int> parts;
            for (int p; fields >> p;) parts.push_back(p);
            Partition lambda(parts);
            if (lambda.size() != n) fail("partition does not have size n");
            out.schur[{n, u}][lambda] = parse_bigint(coeff);
        } else if (tag == "ell") {
            int n = 0;
            unsigned u = 0;
            Int k = 0;
            std::string coeff;
            if (!(fields >> n >> u >> k >> coeff)) fail("malformed ell line");
            out.ell[{n, u}][k] = parse_bigint(coeff);
        } else if (tag == "table") {
            int n = 0;
            std::string verdicts;
            if (!(fields >> n >> verdicts)) fail("malformed table line");
            for (std::size_t u = 0; u < verdicts.size(); ++u) {
                const char c = verdicts[u];
                if (c != 'Y' && c != 'N') fail("table verdicts must be Y or N");
                out.table[{n, static_cast<unsigned>(u)}] = c == 'Y';
            }
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    return out;
}

inline const ExpectedValues& expected_values() {
    static const ExpectedValues values = parse_expected_values(data::kExpectedValuesText);
    return values;
}

}  // namespace ramsum
