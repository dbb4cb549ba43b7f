#pragma once

/*
 * Exact discrete joint distributions over (s_1, ..., s_n, t).
 *
 * Input schemas:
 *   CSV:  header "s1,...,sn,t,p", one row per realization, p as a decimal
 *         or an exact rational "num/den".
 *   JSON: { "n": int, "rows": [ { "s": [...], "t": ..., "p": ... } ] }
 *
 * Values are arbitrary strings or integers; alphabets are the observed
 * value sets (numerically sorted where possible).  Masses must be
 * non-negative and sum to 1 within 1e-12.  Zero-mass rows are retained but
 * flagged and skipped by every average.
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pidlat/collections.hpp"
#include "pidlat/errors.hpp"

namespace pidlat {

inline constexpr double kMassTolerance = 1e-12;

struct Realization {
    std::vector<int> source_codes; // per-source index into the alphabet
    int target_code = 0;

    friend bool operator==(const Realization& a, const Realization& b) {
        return a.source_codes == b.source_codes && a.target_code == b.target_code;
    }
    friend bool operator<(const Realization& a, const Realization& b) {
        if (a.source_codes != b.source_codes) return a.source_codes < b.source_codes;
        return a.target_code < b.target_code;
    }
};

// "1/4" or any decimal accepted by strtod.
inline double parse_probability(const std::string& token, int line = 0, int field = 0) {
    std::string t = token;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; }),
            t.end());
    if (t.empty()) throw parse_error("empty probability", line, field);
    std::size_t slash = t.find('/');
    if (slash != std::string::npos) {
        const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        char* end = nullptr;
        const double a = std::strtod(num.c_str(), &end);
        if (end != num.c_str() + num.size() || num.empty())
            throw parse_error("bad rational probability '" + token + "'", line, field);
        const double b = std::strtod(den.c_str(), &end);
        if (end != den.c_str() + den.size() || den.empty())
            throw parse_error("bad rational probability '" + token + "'", line, field);
        if (b == 0.0) throw parse_error("zero denominator in probability '" + token + "'", line, field);
        return a / b;
    }
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw parse_error("bad probability '" + token + "'", line, field);
    return v;
}

namespace detail {

inline bool parse_integer(const std::string& s, long long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    errno = 0;
    out = std::strtoll(s.c_str(), &end, 10);
    return errno == 0 && end == s.c_str() + s.size();
}

// Integers sort numerically and come before non-numeric tokens.
inline bool value_less(const std::string& a, const std::string& b) {
    long long ia = 0, ib = 0;
    const bool na = parse_integer(a, ia), nb = parse_integer(b, ib);
    if (na && nb) return ia < ib || (ia == ib && a < b);
    if (na != nb) return na;
    return a < b;
}

} // namespace detail

struct RawRow {
    std::vector<std::string> values; // n source values then the target value
    double p = 0.0;
    int line = 0; // 1-based input line for diagnostics; 0 if synthetic
};

class JointDistribution {
  public:
    struct Row {
        Realization realization;
        double p = 0.0;
    };

    static JointDistribution from_rows(int n, std::vector<RawRow> raw) {
        if (n < 1) throw parse_error("source count must be at least 1");
        if (raw.empty()) throw parse_error("distribution has no rows");

        JointDistribution dist;
        dist.n_ = n;
        dist.alphabets_.assign(static_cast<std::size_t>(n) + 1, {});
        for (const RawRow& row : raw) {
            if (static_cast<int>(row.values.size()) != n + 1)
                throw parse_error("expected " + std::to_string(n + 1) + " values per row, got " +
                                      std::to_string(row.values.size()),
                                  row.line);
            if (!(row.p >= 0.0))
                throw parse_error("negative or non-finite probability", row.line, n + 2);
            for (int v = 0; v <= n; ++v) dist.alphabets_[static_cast<std::size_t>(v)].push_back(row.values[static_cast<std::size_t>(v)]);
        }
        for (auto& alphabet : dist.alphabets_) {
            std::sort(alphabet.begin(), alphabet.end(), detail::value_less);
            alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
        }

        double total = 0.0;
        for (const RawRow& row : raw) {
            Row encoded;
            encoded.realization.source_codes.resize(static_cast<std::size_t>(n));
            for (int v = 0; v <= n; ++v) {
                const auto& alphabet = dist.alphabets_[static_cast<std::size_t>(v)];
                const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), row.values[static_cast<std::size_t>(v)],
                                                 detail::value_less);
                const int code = static_cast<int>(it - alphabet.begin());
                if (v < n)
                    encoded.realization.source_codes[static_cast<std::size_t>(v)] = code;
                else
                    encoded.realization.target_code = code;
            }
            encoded.p = row.p;
            total += row.p;
            dist.rows_.push_back(std::move(encoded));
        }
        if (std::abs(total - 1.0) > kMassTolerance)
            throw parse_error("probabilities sum to " + std::to_string(total) + ", expected 1");

        std::sort(dist.rows_.begin(), dist.rows_.end(),
                  [](const Row& a, const Row& b) { return a.realization < b.realization; });
        for (std::size_t i = 1; i < dist.rows_.size(); ++i)
            if (dist.rows_[i].realization == dist.rows_[i - 1].realization)
                throw parse_error("duplicate realization in input (must be one row per realization)");
        return dist;
    }

    int source_count() const { return n_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<std::string>& alphabet(int var) const { return alphabets_[static_cast<std::size_t>(var)]; }
    const std::string& value_name(int var, int code) const {
        return alphabets_[static_cast<std::size_t>(var)][static_cast<std::size_t>(code)];
    }

    // Indices of retained zero-mass rows.
    std::vector<std::size_t> zero_mass_rows() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].p == 0.0) out.push_back(i);
        return out;
    }

    double mass(const Realization& r) const {
        auto it = std::lower_bound(rows_.begin(), rows_.end(), r,
                                   [](const Row& row, const Realization& key) { return row.realization < key; });
        if (it == rows_.end() || !(it->realization == r)) return 0.0;
        return it->p;
    }

    double target_marginal(int target_code) const {
        double p = 0.0;
        for (const Row& row : rows_)
            if (row.realization.target_code == target_code) p += row.p;
        return p;
    }

    // P(S_a matches r on every index in a).  The empty collection matches everything.
    double source_match_probability(const Realization& r, Collection a) const {
        double p = 0.0;
        for (const Row& row : rows_)
            if (matches(row.realization, r, a)) p += row.p;
        return p;
    }

    double source_match_and_target_probability(const Realization& r, Collection a, int target_code) const {
        double p = 0.0;
        for (const Row& row : rows_)
            if (row.realization.target_code == target_code && matches(row.realization, r, a)) p += row.p;
        return p;
    }

    static bool matches(const Realization& row, const Realization& wanted, Collection a) {
        for (std::uint32_t m = a.mask; m != 0; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (row.source_codes[static_cast<std::size_t>(i)] != wanted.source_codes[static_cast<std::size_t>(i)])
                return false;
        }
        return true;
    }

  private:
    int n_ = 0;
    std::vector<std::vector<std::string>> alphabets_; // [0..n-1] sources, [n] target
    std::vector<Row> rows_;                           // ascending by realization, zero-mass retained
};

inline double probability_of_event(const JointDistribution& dist,
                                   const std::function<bool(const Realization&)>& event) {
    double p = 0.0;
    for (const auto& row : dist.rows())
        if (event(row.realization)) p += row.p;
    return p;
}

// ---------------------------------------------------------------------------
// Loaders

inline JointDistribution load_distribution_csv(std::istream& in) {
    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur += c;
            }
        }
        fields.push_back(cur);
        for (std::string& f : fields) {
            while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
            while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.pop_back();
        }
        return fields;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    if (line.empty()) throw parse_error("missing CSV header");

    const std::vector<std::string> header = split(line);
    const int n = static_cast<int>(header.size()) - 2;
    if (n < 1) throw parse_error("CSV header must be s1,...,sn,t,p", line_no);
    for (int i = 0; i < n; ++i)
        if (header[static_cast<std::size_t>(i)] != "s" + std::to_string(i + 1))
            throw parse_error("unknown column '" + header[static_cast<std::size_t>(i)] + "', expected s" +
                                  std::to_string(i + 1),
                              line_no, i + 1);
    if (header[static_cast<std::size_t>(n)] != "t")
        throw parse_error("unknown column '" + header[static_cast<std::size_t>(n)] + "', expected t", line_no, n + 1);
    if (header[static_cast<std::size_t>(n) + 1] != "p")
        throw parse_error("unknown column '" + header[static_cast<std::size_t>(n) + 1] + "', expected p", line_no,
                          n + 2);

    std::vector<RawRow> raw;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields = split(line);
        if (static_cast<int>(fields.size()) != n + 2)
            throw parse_error("expected " + std::to_string(n + 2) + " fields, got " +
                                  std::to_string(fields.size()),
                              line_no);
        RawRow row;
        row.line = line_no;
        row.values.assign(fields.begin(), fields.end() - 1);
        row.p = parse_probability(fields.back(), line_no, n + 2);
        raw.push_back(std::move(row));
    }
    return JointDistribution::from_rows(n, std::move(raw));
}

inline JointDistribution load_distribution_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw parse_error("JSON distribution must be an object with \"n\" and \"rows\"");
    const int n = j.at("n").get<int>();

    auto value_text = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        return v.dump();
    };

    std::vector<RawRow> raw;
    int row_no = 0;
    for (const auto& entry : j.at("rows")) {
        ++row_no;
        if (!entry.is_object() || !entry.contains("s") || !entry.contains("t") || !entry.contains("p"))
            throw parse_error("row must have \"s\", \"t\" and \"p\"", row_no);
        RawRow row;
        row.line = row_no;
        for (const auto& v : entry.at("s")) row.values.push_back(value_text(v));
        row.values.push_back(value_text(entry.at("t")));
        if (entry.at("p").is_string())
            row.p = parse_probability(entry.at("p").get<std::string>(), row_no);
        else
            row.p = entry.at("p").get<double>();
        raw.push_back(std::move(row));
    }
    return JointDistribution::from_rows(n, std::move(raw));
}

// Dispatch on extension: ".json" -> JSON, anything else -> CSV.
inline JointDistribution load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return load_distribution_json(in);
    return load_distribution_csv(in);
}

// Round-trippable echo of the parsed distribution ("%.17g" preserves every
// double exactly).
inline std::string echo_csv(const JointDistribution& dist) {
    const int n = dist.source_count();
    std::string out;
    for (int i = 1; i <= n; ++i) out += "s" + std::to_string(i) + ",";
    out += "t,p\n";
    char buf[64];
    for (const auto& row : dist.rows()) {
        for (int i = 0; i < n; ++i)
            out += dist.value_name(i, row.realization.source_codes[static_cast<std::size_t>(i)]) + ",";
        out += dist.value_name(n, row.realization.target_code);
        std::snprintf(buf, sizeof buf, ",%.17g\n", row.p);
        out += buf;
    }
    return out;
}

} // namespace pidlat
