#pragma once

// Output documents shared by every CLI command. A document is a JSON object
// with a "kind" field; text and CSV are rendered from that same object, so a
// parsed document renders identically to the one that produced it.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ramsum/foulkes.hpp"
#include "ramsum/ramat.hpp"
#include "ramsum/verify.hpp"

namespace ramsum::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

inline Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw domain_error("unknown format '" + std::string(s) + "'");
}

namespace kind {
inline constexpr std::string_view matrix = "matrix";
inline constexpr std::string_view row_sums = "row-sums";
inline constexpr std::string_view scalar = "scalar";
inline constexpr std::string_view ell_expansion = "ell-expansion";
inline constexpr std::string_view schur_expansion = "schur-expansion";
inline constexpr std::string_view positivity_table = "positivity-table";
inline constexpr std::string_view verify_report = "verify-report";
}  // namespace kind

struct OutputDocument {
    Json payload;

    [[nodiscard]] std::string kind() const { return payload.at("kind").get<std::string>(); }
    friend bool operator==(const OutputDocument& a, const OutputDocument& b) { return a.payload == b.payload; }
};

// ---- builders ----

inline OutputDocument matrix_document(const RamanujanMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(std::to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {Json{{"kind", kind::matrix}, {"n", m.n()}, {"divisors", m.divisors().divisors}, {"rows", std::move(rows)}}};
}

inline OutputDocument row_sums_document(const RowSums& rs) {
    Json terms = Json::array();
    for (const auto& [d, a] : rs.values) terms.push_back(Json{{"divisor", d}, {"coeff", std::to_string(a)}});
    return {Json{{"kind", kind::row_sums}, {"n", rs.n}, {"terms", std::move(terms)}}};
}

inline OutputDocument scalar_document(Int n, std::string_view name, const BigInt& value) {
    return {Json{{"kind", kind::scalar}, {"n", n}, {"name", name}, {"value", to_string(value)}}};
}

inline OutputDocument ell_document(const EllExpansion& e, unsigned u) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.coeffs) terms.push_back(Json{{"divisor", k}, {"coeff", to_string(c)}});
    return {Json{{"kind", kind::ell_expansion}, {"n", e.n}, {"u", u}, {"terms", std::move(terms)}}};
}

/// Exactly one of u (for R_{n,u}) and r (for l_n^{(r)}) is set.
inline OutputDocument schur_document(const SchurExpansion& e, std::optional<unsigned> u, std::optional<int> r = {}) {
    Json doc{{"kind", kind::schur_expansion}, {"n", e.degree()}};
    if (u) doc["u"] = *u;
    if (r) doc["r"] = *r;
    Json terms = Json::array();
    for (const auto& [p, c] : e.terms()) terms.push_back(Json{{"partition", p.parts()}, {"coeff", to_string(c)}});
    doc["terms"] = std::move(terms);
    return {std::move(doc)};
}

inline OutputDocument table_document(const std::vector<int>& ns, unsigned u_max, const std::vector<TableCell>& cells,
                                     bool compared) {
    Json jcells = Json::array();
    Json mismatches = Json::array();
    for (const auto& c : cells) {
        Json jc{{"n", c.n}, {"u", c.u}, {"schur_positive", c.verdict.schur_positive}, {"ell_nonneg", c.verdict.ell_nonneg}};
        if (c.verdict.witness)
            jc["witness"] = Json{{"partition", c.verdict.witness->first.parts()}, {"coeff", to_string(c.verdict.witness->second)}};
        else
            jc["witness"] = nullptr;
        if (compared) {
            jc["expected"] = c.expected ? Json(*c.expected ? "Y" : "N") : Json(nullptr);
            if (!c.matches()) mismatches.push_back(Json{{"n", c.n}, {"u", c.u}});
        }
        jcells.push_back(std::move(jc));
    }
    Json doc{{"kind", kind::positivity_table}, {"n", ns}, {"u_max", u_max}, {"cells", std::move(jcells)}};
    if (compared) doc["mismatches"] = std::move(mismatches);
    return {std::move(doc)};
}

inline OutputDocument verify_document(std::string_view suite, const std::vector<VerifyReport>& reports) {
    Json jreports = Json::array();
    bool ok = true;
    for (const auto& rep : reports) {
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"blocking", c.blocking}, {"detail", c.detail}});
        jreports.push_back(Json{{"suite", rep.suite}, {"max_n", rep.max_n}, {"passed", rep.passed()}, {"checks", std::move(checks)}});
        ok = ok && rep.passed();
    }
    return {Json{{"kind", kind::verify_report}, {"suite", suite}, {"passed", ok}, {"reports", std::move(jreports)}}};
}

inline OutputDocument parse_document(std::string_view text) {
    OutputDocument doc{Json::parse(text)};
    if (!doc.payload.is_object() || !doc.payload.contains("kind")) throw domain_error("document has no kind");
    return doc;
}

// ---- rendering ----

namespace detail {

inline std::string partition_label(const Json& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i].get<int>());
    return s + ")";
}

inline std::string partition_csv(const Json& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + std::to_string(parts[i].get<int>());
    return s;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// "3 s(4) + s(3,1) - 2 s(2,2)"; zero terms skipped.
inline std::string linear_combination(const Json& terms, const std::string& symbol, bool partition_keys) {
    std::string s;
    for (const auto& t : terms) {
        std::string c = t.at("coeff").get<std::string>();
        if (c == "0") continue;
        const bool neg = c[0] == '-';
        if (neg) c.erase(0, 1);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (c != "1") s += c + " ";
        s += symbol + (partition_keys ? partition_label(t.at("partition")) : "(" + std::to_string(t.at("divisor").get<Int>()) + ")");
    }
    return s.empty() ? "0" : s;
}

inline std::string render_text(const Json& doc) {
    std::ostringstream os;
    const std::string k = doc.at("kind").get<std::string>();
    if (k == kind::matrix) {
        const auto& divs = doc.at("divisors");
        const auto& rows = doc.at("rows");
        std::size_t width = 1;
        for (const auto& d : divs) width = std::max(width, std::to_string(d.get<Int>()).size());
        for (const auto& row : rows)
            for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
        os << "M_" << doc.at("n").get<Int>() << "\n" << std::setw(static_cast<int>(width)) << "" << " |";
        for (const auto& d : divs) os << ' ' << std::setw(static_cast<int>(width)) << d.get<Int>();
        os << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << std::setw(static_cast<int>(width)) << divs[i].get<Int>() << " |";
            for (const auto& e : rows[i]) os << ' ' << std::setw(static_cast<int>(width)) << e.get<std::string>();
            os << '\n';
        }
    } else if (k == kind::row_sums) {
        for (const auto& t : doc.at("terms"))
            os << "a_" << t.at("divisor").get<Int>() << "(" << doc.at("n").get<Int>() << ") = " << t.at("coeff").get<std::string>() << '\n';
    } else if (k == kind::scalar) {
        os << doc.at("value").get<std::string>() << '\n';
    } else if (k == kind::ell_expansion) {
        os << linear_combination(doc.at("terms"), "l", false) << '\n';
    } else if (k == kind::schur_expansion) {
        os << linear_combination(doc.at("terms"), "s", true) << '\n';
    } else if (k == kind::positivity_table) {
        const auto& ns = doc.at("n");
        const unsigned u_max = doc.at("u_max").get<unsigned>();
        const bool compared = doc.contains("mismatches");
        os << "u\\n";
        for (const auto& n : ns) os << std::setw(5) << n.get<int>();
        os << '\n';
        const auto& cells = doc.at("cells");
        for (unsigned u = 0; u <= u_max; ++u) {
            os << std::setw(3) << u;
            for (std::size_t col = 0; col < ns.size(); ++col) {
                const auto& c = cells[col * (u_max + 1) + u];
                std::string mark = c.at("schur_positive").get<bool>() ? "Y" : "N";
                if (compared && !c.at("expected").is_null() && c.at("expected").get<std::string>() != mark) mark += "!";
                os << std::setw(5) << mark;
            }
            os << '\n';
        }
        if (compared) {
            const auto& mm = doc.at("mismatches");
            if (mm.empty()) {
                os << "all cells match the reference table\n";
            } else {
                os << "mismatches:";
                for (const auto& m : mm) os << " (n=" << m.at("n").get<int>() << ",u=" << m.at("u").get<int>() << ")";
                os << '\n';
            }
        }
    } else if (k == kind::verify_report) {
        for (const auto& rep : doc.at("reports")) {
            os << "[" << rep.at("suite").get<std::string>() << "]\n";
            for (const auto& c : rep.at("checks")) {
                const bool passed = c.at("passed").get<bool>();
                const bool blocking = c.at("blocking").get<bool>();
                os << (passed ? "PASS  " : (blocking ? "FAIL  " : "NOTE  ")) << c.at("name").get<std::string>() << ": "
                   << c.at("detail").get<std::string>() << '\n';
            }
        }
        os << (doc.at("passed").get<bool>() ? "all checks passed" : "verification FAILED") << '\n';
    } else {
        throw domain_error("cannot render kind '" + k + "'");
    }
    return os.str();
}

inline std::string render_csv(const Json& doc) {
    std::ostringstream os;
    const std::string k = doc.at("kind").get<std::string>();
    if (k == kind::matrix) {
        os << "d";
        for (const auto& d : doc.at("divisors")) os << ',' << d.get<Int>();
        os << '\n';
        const auto& divs = doc.at("divisors");
        const auto& rows = doc.at("rows");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << divs[i].get<Int>();
            for (const auto& e : rows[i]) os << ',' << e.get<std::string>();
            os << '\n';
        }
    } else if (k == kind::row_sums || k == kind::ell_expansion) {
        os << "divisor,coeff\n";
        for (const auto& t : doc.at("terms")) os << t.at("divisor").get<Int>() << ',' << t.at("coeff").get<std::string>() << '\n';
    } else if (k == kind::scalar) {
        os << "name,value\n" << doc.at("name").get<std::string>() << ',' << doc.at("value").get<std::string>() << '\n';
    } else if (k == kind::schur_expansion) {
        os << "partition,coeff\n";
        for (const auto& t : doc.at("terms")) os << partition_csv(t.at("partition")) << ',' << t.at("coeff").get<std::string>() << '\n';
    } else if (k == kind::positivity_table) {
        const bool compared = doc.contains("mismatches");
        os << "n,u,schur_positive,ell_nonneg" << (compared ? ",expected" : "") << '\n';
        for (const auto& c : doc.at("cells")) {
            os << c.at("n").get<int>() << ',' << c.at("u").get<int>() << ',' << (c.at("schur_positive").get<bool>() ? "Y" : "N")
               << ',' << (c.at("ell_nonneg").get<bool>() ? "Y" : "N");
            if (compared) os << ',' << (c.at("expected").is_null() ? "" : c.at("expected").get<std::string>());
            os << '\n';
        }
    } else if (k == kind::verify_report) {
        os << "suite,check,passed,blocking,detail\n";
        for (const auto& rep : doc.at("reports"))
            for (const auto& c : rep.at("checks"))
                os << rep.at("suite").get<std::string>() << ',' << csv_quote(c.at("name").get<std::string>()) << ','
                   << (c.at("passed").get<bool>() ? "true" : "false") << ',' << (c.at("blocking").get<bool>() ? "true" : "false")
                   << ',' << csv_quote(c.at("detail").get<std::string>()) << '\n';
    } else {
        throw domain_error("cannot render kind '" + k + "'");
    }
    return os.str();
}

}  // namespace detail

inline std::string render(const OutputDocument& doc, Format format) {
    switch (format) {
        case Format::json: return doc.payload.dump() + "\n";
        case Format::csv: return detail::render_csv(doc.payload);
        case Format::text: break;
    }
    return detail::render_text(doc.payload);
}

}  // namespace ramsum::cli
