// JSON / CSV / binary serialization for the domain types. JSON is the source
// of truth for reports; CSV and the compact binary density format are derived
// conveniences. No timestamps anywhere: identical inputs give identical bytes.
//
// Density CSV: "index,re,im" rows. Binary: magic "ABDN", u32 version, u32 k,
// u64 orders[k], then 2|G| little-endian doubles (re, im interleaved).
#pragma once

#include <fstream>

#include "abel/bohr.hpp"
#include "abel/counting.hpp"
#include "abel/fourier.hpp"
#include "abel/regularity.hpp"

#include "json.hpp"

namespace abel {

using json = nlohmann::json;

inline json to_json(const GroupSpec& g) { return g.to_string(); }

inline json to_json(const Element& e) { return json(e.coords); }

inline json to_json(const BohrSpec& b) {
    json freqs = json::array();
    for (int64_t q : b.freqs) freqs.push_back(b.group.element_at(q).coords);
    return json{{"group", b.group.to_string()}, {"freqs", freqs}, {"radius", b.radius}};
}

inline json to_json(const InclusionCertificate& c) {
    return json{{"target", c.target},
                {"target_hash", c.target_hash},
                {"members_checked", c.members_checked},
                {"verified", c.verified}};
}

inline json to_json(const CertifiedBohr& b) {
    return json{{"spec", to_json(b.spec)},
                {"members", b.member_idx},
                {"measure", static_cast<double>(b.member_idx.size()) /
                                static_cast<double>(b.spec.group.cardinality())},
                {"certificate", to_json(b.cert)}};
}

inline json to_json(const Density& f) {
    json vals = json::array();
    for (const cplx& v : f.values) vals.push_back(json::array({v.real(), v.imag()}));
    return json{{"group", f.group.to_string()},
                {"values", vals},
                {"unit_range", f.unit_range}};
}

inline json to_json(const Kernel& k) {
    return json{{"density", to_json(k.density)},
                {"support", to_json(k.support_spec)},
                {"l1_spectrum", k.l1_spectrum}};
}

inline json to_json(const Endomorphism& e) {
    json rows = json::array();
    size_t k = e.domain().rank();
    for (size_t i = 0; i < k; ++i) {
        json row = json::array();
        for (size_t j = 0; j < k; ++j) row.push_back(e.entry(i, j));
        rows.push_back(row);
    }
    return json{{"group", e.domain().to_string()}, {"matrix", rows}};
}

inline json to_json(const IterationRecord& r) {
    return json{{"n", r.n},
                {"eta", r.eta},
                {"log_eta", r.log_eta},
                {"kappa", std::isfinite(r.kappa) ? json(r.kappa) : json("inf")},
                {"lambda", r.lambda},
                {"lambda_size", r.lambda_size},
                {"mu_bohr", r.mu_bohr},
                {"l1_kernel", r.l1_kernel},
                {"smoothing_gap", r.smoothing_gap},
                {"step_l2", r.step_l2}};
}

inline json to_json(const Decomposition& d) {
    json trace = json::array();
    for (const IterationRecord& r : d.trace) trace.push_back(to_json(r));
    return json{{"group", d.f_st.group.to_string()},
                {"mode", d.mode == DecomposeMode::faithful ? "faithful" : "adaptive"},
                {"epsilon", d.epsilon},
                {"delta", d.delta},
                {"stop_index", d.stop_index},
                {"trace", trace},
                {"kernel_support", to_json(d.kernel.support_spec)},
                {"properties",
                 {{"c_bound", d.c_bound},
                  {"j_prime", d.j_prime},
                  {"j_prime_floor", d.delta * d.delta * d.delta - d.epsilon},
                  {"er_l2", d.er_l2},
                  {"un_gap", d.un_gap},
                  {"un_product", d.un_product}}}};
}

inline json to_json(const BoundReport& r) {
    return json{{"lhs", r.lhs},           {"rhs", r.rhs},
                {"rhs_unit", r.rhs_unit}, {"constant", r.constant},
                {"passes", r.passes},     {"passes_unit", r.passes_unit},
                {"margin", r.margin}};
}

inline void write_density_csv(const Density& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw argument_error("cannot open " + path);
    out << "index,re,im\n";
    for (size_t i = 0; i < f.values.size(); ++i)
        out << i << "," << f.values[i].real() << "," << f.values[i].imag() << "\n";
}

inline Density read_density_csv(const GroupSpec& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open " + path);
    std::vector<cplx> vals(static_cast<size_t>(g.cardinality()), cplx(0, 0));
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t c1 = line.find(',');
        size_t c2 = line.find(',', c1 + 1);
        int64_t idx = std::stoll(line.substr(0, c1));
        double re = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        double im = std::stod(line.substr(c2 + 1));
        vals.at(static_cast<size_t>(idx)) = cplx(re, im);
    }
    return Density(g, std::move(vals));
}

inline void write_density_binary(const Density& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw argument_error("cannot open " + path);
    out.write("ABDN", 4);
    uint32_t version = 1, k = static_cast<uint32_t>(f.group.rank());
    out.write(reinterpret_cast<const char*>(&version), sizeof version);
    out.write(reinterpret_cast<const char*>(&k), sizeof k);
    for (size_t i = 0; i < f.group.rank(); ++i) {
        uint64_t n = static_cast<uint64_t>(f.group.order(i));
        out.write(reinterpret_cast<const char*>(&n), sizeof n);
    }
    for (const cplx& v : f.values) {
        double re = v.real(), im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

inline Density read_density_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::string(magic, 4) != "ABDN") throw argument_error("bad density file magic");
    uint32_t version = 0, k = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    in.read(reinterpret_cast<char*>(&k), sizeof k);
    if (version != 1) throw argument_error("unsupported density file version");
    std::vector<int64_t> orders(k);
    for (uint32_t i = 0; i < k; ++i) {
        uint64_t n = 0;
        in.read(reinterpret_cast<char*>(&n), sizeof n);
        orders[i] = static_cast<int64_t>(n);
    }
    GroupSpec g(std::move(orders));
    std::vector<cplx> vals(static_cast<size_t>(g.cardinality()));
    for (cplx& v : vals) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        v = cplx(re, im);
    }
    if (!in) throw argument_error("truncated density file");
    return Density(g, std::move(vals));
}

inline void write_trace_csv(const Decomposition& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw argument_error("cannot open " + path);
    out << "n,eta,kappa,lambda_size,mu_bohr,l1_kernel,smoothing_gap,step_l2\n";
    for (const IterationRecord& r : d.trace)
        out << r.n << "," << r.eta << "," << r.kappa << "," << r.lambda_size << "," << r.mu_bohr
            << "," << r.l1_kernel << "," << r.smoothing_gap << "," << r.step_l2 << "\n";
}

}  // namespace abel
