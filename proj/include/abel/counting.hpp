// Trilinear configuration counts for the pattern x, x + phi(y), x + psi(y),
// the companion pattern x, x + phi(y), psi(y), Brauer-style partition sums,
// and counting-lemma inequality checks. The constant is explicit:
// sqrt(m_phi * m_psi), from the two character-fiber multiplicity bounds
// (each dual fiber of a finite-index map has at most index-many characters).
//
// The O(|G|^2) double sum is the reference path everywhere; the spectral
// fast path for the unweighted count is validated against it in tests.
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "abel/fourier.hpp"
#include "abel/group.hpp"
#include "abel/kernel.hpp"

namespace abel {

// The pattern (phi, psi) with cached image indices of phi, psi and phi - psi.
struct TripleConfig {
    Endomorphism phi;
    Endomorphism psi;
    int64_t m_phi;
    int64_t m_psi;
    int64_t m_diff;
    std::vector<int64_t> phi_table;
    std::vector<int64_t> psi_table;

    TripleConfig(Endomorphism ph, Endomorphism ps)
        : phi(std::move(ph)),
          psi(std::move(ps)),
          m_phi(0),
          m_psi(0),
          m_diff(0) {
        if (phi.domain() != psi.domain()) throw argument_error("pattern maps domain mismatch");
        m_phi = image_index(phi);
        m_psi = image_index(psi);
        m_diff = image_index(phi - psi);
        phi_table = apply_table(phi);
        psi_table = apply_table(psi);
    }

    const GroupSpec& group() const { return phi.domain(); }

    // sqrt(m_phi * m_psi): the explicit counting-lemma constant.
    double counting_constant() const {
        return std::sqrt(static_cast<double>(m_phi) * static_cast<double>(m_psi));
    }

    // max over pairs drawn from {phi, psi, phi-psi}: the constant C_max in
    // |J(f) - J(g)| <= 3 C_max ||fhat - ghat||_inf.
    double lipschitz_constant() const {
        double a = std::sqrt(static_cast<double>(m_phi) * static_cast<double>(m_psi));
        double b = std::sqrt(static_cast<double>(m_phi) * static_cast<double>(m_diff));
        double c = std::sqrt(static_cast<double>(m_psi) * static_cast<double>(m_diff));
        return std::max({a, b, c});
    }
};

namespace detail {

// I(t) = (1/|G|) sum_x f1(x) f2(x + phi(t)) f3(x + psi(t)) for every t.
inline std::vector<cplx> fiber_values(const Density& f1, const Density& f2, const Density& f3,
                                      const TripleConfig& cfg) {
    const GroupSpec& g = cfg.group();
    if (f1.group != g || f2.group != g || f3.group != g)
        throw argument_error("count group mismatch");
    const int64_t n = g.cardinality();
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int64_t t = 0; t < n; ++t) {
        const int64_t a = cfg.phi_table[static_cast<size_t>(t)];
        const int64_t b = cfg.psi_table[static_cast<size_t>(t)];
        cplx acc = 0;
        for (int64_t x = 0; x < n; ++x) {
            acc += f1.values[static_cast<size_t>(x)] *
                   f2.values[static_cast<size_t>(g.add_index(x, a))] *
                   f3.values[static_cast<size_t>(g.add_index(x, b))];
        }
        out[static_cast<size_t>(t)] = acc / static_cast<double>(n);
    }
    return out;
}

}  // namespace detail

// J(f1,f2,f3) by the mandatory O(|G|^2) reference path. Equals the mean of
// the fiber counts in the same summation order.
inline double triple_count_direct(const Density& f1, const Density& f2, const Density& f3,
                                  const TripleConfig& cfg) {
    std::vector<cplx> fib = detail::fiber_values(f1, f2, f3, cfg);
    cplx acc = 0;
    for (const cplx& v : fib) acc += v;
    return (acc / static_cast<double>(fib.size())).real();
}

// Spectral fast path: J = sum over (g2, g3) with g2 o phi + g3 o psi = 0 of
// f1hat(-(g2+g3)) f2hat(g2) f3hat(g3).
inline double triple_count(const Density& f1, const Density& f2, const Density& f3,
                           const TripleConfig& cfg) {
    const GroupSpec& g = cfg.group();
    if (f1.group != g || f2.group != g || f3.group != g)
        throw argument_error("count group mismatch");
    const int64_t n = g.cardinality();
    Spectrum s1 = dft(f1), s2 = dft(f2), s3 = dft(f3);
    std::vector<int64_t> dphi = apply_table(dual_matrix(cfg.phi));
    std::vector<int64_t> dpsi = apply_table(dual_matrix(cfg.psi));
    // bucket the dual fibers of psi
    std::vector<std::vector<int64_t>> bucket(static_cast<size_t>(n));
    for (int64_t q = 0; q < n; ++q) bucket[static_cast<size_t>(dpsi[static_cast<size_t>(q)])].push_back(q);
    cplx acc = 0;
    for (int64_t g2 = 0; g2 < n; ++g2) {
        const cplx v2 = s2.values[static_cast<size_t>(g2)];
        if (std::abs(v2) == 0.0) continue;
        const int64_t target = g.neg_index(dphi[static_cast<size_t>(g2)]);
        for (int64_t g3 : bucket[static_cast<size_t>(target)]) {
            const cplx v3 = s3.values[static_cast<size_t>(g3)];
            if (std::abs(v3) == 0.0) continue;
            const int64_t gsum = g.neg_index(g.add_index(g2, g3));
            acc += s1.values[static_cast<size_t>(gsum)] * v2 * v3;
        }
    }
    return acc.real();
}

// J'(f1,f2,f3; K) = (1/|G|^2) sum_{x,t} f1(x) f2(x+phi(t)) f3(x+psi(t)) K(t).
inline double weighted_triple_count(const Density& f1, const Density& f2, const Density& f3,
                                    const Kernel& k, const TripleConfig& cfg) {
    if (k.group() != cfg.group()) throw argument_error("kernel group mismatch");
    std::vector<cplx> fib = detail::fiber_values(f1, f2, f3, cfg);
    cplx acc = 0;
    for (size_t t = 0; t < fib.size(); ++t) acc += fib[t] * k.density.values[t];
    return (acc / static_cast<double>(fib.size())).real();
}

// I_f(t) as a Density over t; its mean equals triple_count_direct exactly.
inline Density fiber_count(const Density& f, const TripleConfig& cfg) {
    return Density(cfg.group(), detail::fiber_values(f, f, f, cfg));
}

// R(w) = (1/|G|^2) sum_{x,y} f(x+w) f(x+phi(y)) f(x+psi(y)).
inline double shifted_count(const Density& f, int64_t w_idx, const TripleConfig& cfg) {
    return triple_count_direct(translate(f, w_idx), f, f, cfg);
}

// R(w) for every w at O(|G|^2) total cost: first S(u) = (1/|G|) sum_y
// f(u+phi(y)) f(u+psi(y)), then R(w) = (1/|G|) sum_x f(x+w) S(x).
inline std::vector<double> shifted_count_all(const Density& f, const TripleConfig& cfg) {
    const GroupSpec& g = cfg.group();
    if (f.group != g) throw argument_error("count group mismatch");
    const int64_t n = g.cardinality();
    std::vector<double> s(static_cast<size_t>(n), 0.0);
    for (int64_t y = 0; y < n; ++y) {
        const int64_t a = cfg.phi_table[static_cast<size_t>(y)];
        const int64_t b = cfg.psi_table[static_cast<size_t>(y)];
        for (int64_t u = 0; u < n; ++u)
            s[static_cast<size_t>(u)] += (f.values[static_cast<size_t>(g.add_index(u, a))] *
                                          f.values[static_cast<size_t>(g.add_index(u, b))])
                                             .real();
    }
    std::vector<double> r(static_cast<size_t>(n), 0.0);
    for (int64_t w = 0; w < n; ++w) {
        double acc = 0;
        for (int64_t x = 0; x < n; ++x)
            acc += f.values[static_cast<size_t>(g.add_index(x, w))].real() * s[static_cast<size_t>(x)];
        r[static_cast<size_t>(w)] = acc / (static_cast<double>(n) * static_cast<double>(n));
    }
    return r;
}

// The companion pattern (1/|G|^2) sum_{x,y} f1(x) f2(x+phi(y)) f3(psi(y)).
inline double mixed_count(const Density& f1, const Density& f2, const Density& f3,
                          const TripleConfig& cfg) {
    const GroupSpec& g = cfg.group();
    if (f1.group != g || f2.group != g || f3.group != g)
        throw argument_error("count group mismatch");
    const int64_t n = g.cardinality();
    cplx acc = 0;
    for (int64_t y = 0; y < n; ++y) {
        const cplx fy = f3.values[static_cast<size_t>(cfg.psi_table[static_cast<size_t>(y)])];
        if (std::abs(fy) == 0.0) continue;
        const int64_t a = cfg.phi_table[static_cast<size_t>(y)];
        cplx inner = 0;
        for (int64_t x = 0; x < n; ++x)
            inner += f1.values[static_cast<size_t>(x)] *
                     f2.values[static_cast<size_t>(g.add_index(x, a))];
        acc += inner * fy;
    }
    return (acc / static_cast<double>(n * n)).real();
}

// R_i(w) for the partition pipeline:
// (1/|G|^2) sum_{x,y} f(psi(y)) f(x+w) f(x+phi(y)).
inline double semi_shifted_count(const Density& f, int64_t w_idx, const TripleConfig& cfg) {
    return mixed_count(translate(f, w_idx), f, f, cfg);
}

// semi_shifted_count for every w at O(|G|^2) total cost, via the
// autocorrelation rho(d) = sum_u f(u) f(u+d) and the pushed weight
// h(v) = sum_y f(psi(y)) [phi(y) = v].
inline std::vector<double> semi_shifted_count_all(const Density& f, const TripleConfig& cfg) {
    const GroupSpec& g = cfg.group();
    if (f.group != g) throw argument_error("count group mismatch");
    const int64_t n = g.cardinality();
    std::vector<double> rho(static_cast<size_t>(n), 0.0);
    for (int64_t d = 0; d < n; ++d) {
        double acc = 0;
        for (int64_t u = 0; u < n; ++u)
            acc += f.values[static_cast<size_t>(u)].real() *
                   f.values[static_cast<size_t>(g.add_index(u, d))].real();
        rho[static_cast<size_t>(d)] = acc;
    }
    std::vector<double> h(static_cast<size_t>(n), 0.0);
    for (int64_t y = 0; y < n; ++y)
        h[static_cast<size_t>(cfg.phi_table[static_cast<size_t>(y)])] +=
            f.values[static_cast<size_t>(cfg.psi_table[static_cast<size_t>(y)])].real();
    std::vector<double> r(static_cast<size_t>(n), 0.0);
    for (int64_t w = 0; w < n; ++w) {
        double acc = 0;
        for (int64_t v = 0; v < n; ++v)
            acc += h[static_cast<size_t>(v)] * rho[static_cast<size_t>(g.sub_index(w, v))];
        r[static_cast<size_t>(w)] = acc / (static_cast<double>(n) * static_cast<double>(n));
    }
    return r;
}

struct BrauerSum {
    std::vector<double> t;      // normalized per-class sums T_i
    std::vector<int64_t> raw;   // integer pattern counts per class
    double total;
    bool commuting;             // hypothesis record
    std::vector<int64_t> indices;  // [G : psi(G)], then [G : phi_j(G)]
};

// sum over classes of (1/|G|^2) #{(x,y) : psi(y), x, x+phi_1(y), ..., x+phi_k(y)
// all in the same class}.
inline BrauerSum brauer_sum(const std::vector<std::vector<int64_t>>& partition,
                            const Endomorphism& psi, const std::vector<Endomorphism>& phis) {
    const GroupSpec& g = psi.domain();
    const int64_t n = g.cardinality();
    // validate the partition
    std::vector<int64_t> owner(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < partition.size(); ++i) {
        for (int64_t x : partition[i]) {
            if (x < 0 || x >= n || owner[static_cast<size_t>(x)] != -1)
                throw argument_error("classes must be disjoint subsets of G");
            owner[static_cast<size_t>(x)] = static_cast<int64_t>(i);
        }
    }
    for (int64_t x = 0; x < n; ++x)
        if (owner[static_cast<size_t>(x)] == -1)
            throw argument_error("partition does not cover the group");

    BrauerSum out;
    out.commuting = true;
    out.indices.push_back(image_index(psi));
    for (const Endomorphism& p : phis) {
        if (p.domain() != g) throw argument_error("map domain mismatch");
        if (!commutes(psi, p)) out.commuting = false;
        out.indices.push_back(image_index(p));
    }
    for (size_t a = 0; a < phis.size(); ++a)
        for (size_t b = a + 1; b < phis.size(); ++b)
            if (!commutes(phis[a], phis[b])) out.commuting = false;

    std::vector<int64_t> psi_t = apply_table(psi);
    std::vector<std::vector<int64_t>> phi_t;
    for (const Endomorphism& p : phis) phi_t.push_back(apply_table(p));

    out.raw.assign(partition.size(), 0);
    for (int64_t y = 0; y < n; ++y) {
        const int64_t cls = owner[static_cast<size_t>(psi_t[static_cast<size_t>(y)])];
        std::vector<int64_t> shifts(phis.size());
        for (size_t j = 0; j < phis.size(); ++j) shifts[j] = phi_t[j][static_cast<size_t>(y)];
        for (int64_t x : partition[static_cast<size_t>(cls)]) {
            bool all = true;
            for (size_t j = 0; j < shifts.size(); ++j) {
                if (owner[static_cast<size_t>(g.add_index(x, shifts[j]))] != cls) {
                    all = false;
                    break;
                }
            }
            if (all) ++out.raw[static_cast<size_t>(cls)];
        }
    }
    out.t.resize(partition.size());
    out.total = 0;
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    for (size_t i = 0; i < partition.size(); ++i) {
        out.t[i] = static_cast<double>(out.raw[i]) / nn;
        out.total += out.t[i];
    }
    return out;
}

enum class BoundVariant { shifted, fiber };

struct BoundReport {
    double lhs;
    double rhs;            // with C = sqrt(m_phi * m_psi)
    double rhs_unit;       // with C = 1 (the finite-index-free version)
    double constant;
    bool passes;
    bool passes_unit;
    double margin;         // rhs - lhs
};

// Evaluates the counting-lemma inequality on a concrete instance. `shifted`
// checks |iint f1(x) f2(x+phi y) f3(x+psi y) K(y)| against
// C ||f1hat||_inf ||f2||_2 ||f3||_2 ||Khat||_1; `fiber` checks the pattern
// with f3(psi(y)) and no kernel weight.
inline BoundReport counting_bound_check(const Density& f1, const Density& f2, const Density& f3,
                                        const std::optional<Kernel>& k, const TripleConfig& cfg,
                                        BoundVariant variant) {
    double lhs = 0;
    double kmass = 1.0;
    if (variant == BoundVariant::shifted) {
        Kernel kk = k ? *k : Kernel::uniform(cfg.group());
        lhs = std::abs(weighted_triple_count(f1, f2, f3, kk, cfg));
        kmass = kk.l1_spectrum;
    } else {
        lhs = std::abs(mixed_count(f1, f2, f3, cfg));
    }
    const double base = sup_norm(dft(f1)) * l2_norm(f2) * l2_norm(f3) * kmass;
    BoundReport r;
    r.lhs = lhs;
    r.constant = cfg.counting_constant();
    r.rhs = r.constant * base;
    r.rhs_unit = base;
    r.passes = lhs <= r.rhs * (1.0 + 1e-9) + 1e-12;
    r.passes_unit = lhs <= r.rhs_unit * (1.0 + 1e-9) + 1e-12;
    r.margin = r.rhs - lhs;
    return r;
}

}  // namespace abel
