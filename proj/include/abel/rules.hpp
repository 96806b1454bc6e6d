// Set / partition / coloring rule DSL used by the CLI and config files:
//   "random:<density>:seed<k>"  seeded Bernoulli set (per-index splitmix hash)
//   "random:<r>:seed<k>"        (partitions) seeded uniform class in [0, r)
//   "parity"                    two classes by parity of the first coordinate
//   "mod:<m>"                   m classes by first coordinate mod m
//   "mod:<m>:<c0|c1|...>"       explicit residue grouping, e.g. "mod:6:0,3|1,4|2,5"
//   "csv:<path>"                one index per line (sets) / "index,class" rows
//   "interval:<density>"        the initial segment of the enumeration order
// Deterministic for a fixed seed across runs and platforms.
#pragma once

#include <fstream>
#include <sstream>

#include "abel/fourier.hpp"
#include "abel/group.hpp"

namespace abel {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline uint64_t seeded_hash(uint64_t seed, int64_t index) {
    SplitMix64 sm(seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(index) + 1);
    sm.next();
    return sm.next();
}

inline uint64_t parse_seed(const std::string& tok) {
    if (tok.rfind("seed", 0) == 0) return std::stoull(tok.substr(4));
    return std::stoull(tok);
}

}  // namespace detail

// Parses a set rule into a sorted vector of element indices.
inline std::vector<int64_t> parse_set_rule(const GroupSpec& g, const std::string& rule) {
    const int64_t n = g.cardinality();
    std::vector<int64_t> out;
    auto parts = detail::split(rule, ':');
    if (parts[0] == "random") {
        if (parts.size() != 3) throw argument_error("random set rule needs density and seed");
        double density = std::stod(parts[1]);
        uint64_t seed = detail::parse_seed(parts[2]);
        for (int64_t i = 0; i < n; ++i) {
            double u = static_cast<double>(detail::seeded_hash(seed, i) >> 11) * 0x1.0p-53;
            if (u < density) out.push_back(i);
        }
    } else if (parts[0] == "interval") {
        if (parts.size() != 2) throw argument_error("interval rule needs a density");
        double density = std::stod(parts[1]);
        int64_t count = static_cast<int64_t>(density * static_cast<double>(n));
        for (int64_t i = 0; i < count && i < n; ++i) out.push_back(i);
    } else if (parts[0] == "parity") {
        for (int64_t i = 0; i < n; ++i)
            if (g.element_at(i).coords[0] % 2 == 0) out.push_back(i);
    } else if (parts[0] == "csv") {
        if (parts.size() != 2) throw argument_error("csv rule needs a path");
        std::ifstream in(parts[1]);
        if (!in) throw argument_error("cannot open " + parts[1]);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            out.push_back(std::stoll(line));
        }
    } else {
        throw argument_error("unknown set rule: " + rule);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Parses a partition rule into disjoint classes covering the group.
inline std::vector<std::vector<int64_t>> parse_partition_rule(const GroupSpec& g,
                                                              const std::string& rule) {
    const int64_t n = g.cardinality();
    auto parts = detail::split(rule, ':');
    std::vector<std::vector<int64_t>> classes;
    if (parts[0] == "parity") {
        classes.assign(2, {});
        for (int64_t i = 0; i < n; ++i)
            classes[static_cast<size_t>(g.element_at(i).coords[0] % 2)].push_back(i);
    } else if (parts[0] == "mod") {
        if (parts.size() < 2) throw argument_error("mod rule needs a modulus");
        int64_t m = std::stoll(parts[1]);
        if (m < 1) throw argument_error("modulus must be positive");
        if (parts.size() == 2) {
            classes.assign(static_cast<size_t>(m), {});
            for (int64_t i = 0; i < n; ++i)
                classes[static_cast<size_t>(g.element_at(i).coords[0] % m)].push_back(i);
        } else {
            auto groups = detail::split(parts[2], '|');
            std::vector<int64_t> class_of(static_cast<size_t>(m), -1);
            for (size_t c = 0; c < groups.size(); ++c)
                for (const std::string& tok : detail::split(groups[c], ','))
                    class_of.at(static_cast<size_t>(std::stoll(tok))) = static_cast<int64_t>(c);
            for (int64_t r : class_of)
                if (r < 0) throw argument_error("mod grouping does not cover all residues");
            classes.assign(groups.size(), {});
            for (int64_t i = 0; i < n; ++i)
                classes[static_cast<size_t>(class_of[static_cast<size_t>(g.element_at(i).coords[0] % m)])]
                    .push_back(i);
        }
    } else if (parts[0] == "random") {
        if (parts.size() != 3) throw argument_error("random partition rule needs r and seed");
        int64_t r = std::stoll(parts[1]);
        uint64_t seed = detail::parse_seed(parts[2]);
        if (r < 1) throw argument_error("need at least one class");
        classes.assign(static_cast<size_t>(r), {});
        for (int64_t i = 0; i < n; ++i)
            classes[static_cast<size_t>(detail::seeded_hash(seed, i) % static_cast<uint64_t>(r))]
                .push_back(i);
    } else if (parts[0] == "csv") {
        if (parts.size() != 2) throw argument_error("csv rule needs a path");
        std::ifstream in(parts[1]);
        if (!in) throw argument_error("cannot open " + parts[1]);
        std::string line;
        std::vector<std::pair<int64_t, int64_t>> rows;
        int64_t maxc = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto toks = detail::split(line, ',');
            if (toks.size() != 2) throw argument_error("partition csv rows are index,class");
            rows.emplace_back(std::stoll(toks[0]), std::stoll(toks[1]));
            maxc = std::max(maxc, rows.back().second);
        }
        classes.assign(static_cast<size_t>(maxc + 1), {});
        for (auto [idx, cls] : rows) classes[static_cast<size_t>(cls)].push_back(idx);
    } else {
        throw argument_error("unknown partition rule: " + rule);
    }
    // drop empty classes but keep order
    std::vector<std::vector<int64_t>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

// Integer-line variants over [-N, N] for the transfer module.
inline std::vector<std::vector<int64_t>> parse_interval_partition(int64_t n,
                                                                  const std::string& rule) {
    auto parts = detail::split(rule, ':');
    std::vector<std::vector<int64_t>> classes;
    auto norm = [](int64_t v, int64_t m) { return ((v % m) + m) % m; };
    if (parts[0] == "parity") {
        classes.assign(2, {});
        for (int64_t v = -n; v <= n; ++v) classes[static_cast<size_t>(norm(v, 2))].push_back(v);
    } else if (parts[0] == "mod") {
        int64_t m = std::stoll(parts.at(1));
        classes.assign(static_cast<size_t>(m), {});
        for (int64_t v = -n; v <= n; ++v) classes[static_cast<size_t>(norm(v, m))].push_back(v);
    } else if (parts[0] == "random") {
        int64_t r = std::stoll(parts.at(1));
        uint64_t seed = detail::parse_seed(parts.at(2));
        classes.assign(static_cast<size_t>(r), {});
        for (int64_t v = -n; v <= n; ++v)
            classes[static_cast<size_t>(detail::seeded_hash(seed, v) % static_cast<uint64_t>(r))]
                .push_back(v);
    } else if (parts[0] == "csv") {
        // "value,class" rows over [-N, N]
        std::ifstream in(parts.at(1));
        if (!in) throw argument_error("cannot open " + parts.at(1));
        std::string line;
        int64_t maxc = 0;
        std::vector<std::pair<int64_t, int64_t>> rows;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto toks = detail::split(line, ',');
            if (toks.size() != 2) throw argument_error("interval csv rows are value,class");
            rows.emplace_back(std::stoll(toks[0]), std::stoll(toks[1]));
            maxc = std::max(maxc, rows.back().second);
        }
        classes.assign(static_cast<size_t>(maxc + 1), {});
        for (auto [v, c] : rows) classes[static_cast<size_t>(c)].push_back(v);
    } else {
        throw argument_error("unknown interval partition rule: " + rule);
    }
    std::vector<std::vector<int64_t>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

}  // namespace abel
