// The Bourgain-style regularity decomposition f = f_st + f_er + f_un run as
// an executable iteration, and its consumers: Khintchine-type level sets,
// the R(w)-threshold Bohr set, and certified Bohr subsets of
// phi1(A) + phi2(A) + phi3(A).
//
// Two modes:
//   faithful  - the worst-case recurrence kappa_n = nu(eta_n)^{-1/2},
//               eta_{n+1} = min(eta_n, eps^2/(4 kappa_n^2), eps nu(eps/(2 kappa_n)))
//               with nu(eta) = (C0 eta)^{12/eta^2}, carried in log space since
//               nu underflows immediately.
//   adaptive  - kappa_n^2 = measured ||Khat_n||_1 and the third term uses the
//               measured spectral mass of the candidate final kernel (with a
//               factor 1/2; smaller eta is always admissible and it makes
//               property (5) strict).
//
// Radii below the group's minimum nonzero character distance are clamped to
// 1e-14; any two radii under that distance define the same member set, so the
// clamp is exact.
#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "abel/bohr.hpp"
#include "abel/counting.hpp"
#include "abel/fourier.hpp"
#include "abel/kernel.hpp"

namespace abel {

inline constexpr double kRadiusFloor = 1e-14;

enum class DecomposeMode { faithful, adaptive };

struct IterationRecord {
    int n;
    double eta;         // operational radius at this step
    double log_eta;     // exact log-space value
    double kappa;       // kappa_n fed into the recurrence (inf allowed)
    std::vector<int64_t> lambda;  // the pushed large spectrum Lambda_n
    int64_t lambda_size;
    double mu_bohr;     // measured mu(B(Lambda_n; eta_n))
    double l1_kernel;   // measured ||Khat_n||_1
    double smoothing_gap;  // ||fhat - fhat_n||_inf (must be <= eta_n)
    double step_l2;     // ||f_{n+1} - f_n||_2
};

struct Decomposition {
    Density f_st;
    Density f_er;
    Density f_un;
    Kernel kernel;
    std::vector<IterationRecord> trace;
    double epsilon;
    double delta;
    int stop_index;
    DecomposeMode mode;
    // the five recorded property values
    double c_bound;    // C with ||K||_inf <= C
    double j_prime;    // J'(f_st)
    double er_l2;      // ||f_er||_2
    double un_gap;     // ||fhat_un||_inf
    double un_product; // ||fhat_un||_inf * ||Khat||_1
};

// d(t) = max over the translates t, phi(t), psi(t) of ||fhat - fhat_.||_inf.
inline double translate_defect(const Density& f, const TripleConfig& cfg, int64_t t_idx) {
    Spectrum s = dft(f);
    double a = translate_gap_spectrum(s, t_idx);
    double b = translate_gap_spectrum(s, cfg.phi_table[static_cast<size_t>(t_idx)]);
    double c = translate_gap_spectrum(s, cfg.psi_table[static_cast<size_t>(t_idx)]);
    return std::max({a, b, c});
}

namespace detail {

// log nu(eta) = (12/eta^2) log(C0 eta), evaluated from log(eta); IEEE
// semantics give -inf when the exponent overflows, which is what we want.
inline double log_nu(double log_eta) {
    double inv2 = std::exp(-2.0 * log_eta);
    return 12.0 * inv2 * (std::log(kBohrConstant) + log_eta);
}

// Large spectrum of fhat at threshold thr pushed through id, phi, psi.
inline std::vector<int64_t> pushed_large_spectrum(const Spectrum& fhat, const TripleConfig& cfg,
                                                  double thr) {
    const GroupSpec& g = fhat.group;
    Endomorphism dphi = dual_matrix(cfg.phi);
    Endomorphism dpsi = dual_matrix(cfg.psi);
    std::vector<int64_t> out;
    for (int64_t q = 0; q < g.cardinality(); ++q) {
        if (std::abs(fhat.values[static_cast<size_t>(q)]) > thr) {
            out.push_back(q);
            out.push_back(dphi.apply_index(q));
            out.push_back(dpsi.apply_index(q));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// f * K via spectra, cleaned back into [0,1] real (the convolution of a
// [0,1] function with a mean-1 nonnegative kernel stays in [0,1]; cleaning
// removes only roundoff).
inline Density smooth(const Spectrum& fhat, const Kernel& k) {
    Spectrum prod = dft(k.density);
    for (size_t i = 0; i < prod.values.size(); ++i) prod.values[i] *= fhat.values[i];
    Density out = idft(prod);
    for (cplx& v : out.values) {
        double re = std::min(1.0, std::max(0.0, v.real()));
        v = cplx(re, 0.0);
    }
    out.unit_range = true;
    return out;
}

inline double l2_diff(const Density& a, const Density& b) {
    double s = 0;
    for (size_t i = 0; i < a.values.size(); ++i) s += std::norm(a.values[i] - b.values[i]);
    return std::sqrt(s / static_cast<double>(a.values.size()));
}

inline double sup_spec_diff(const Spectrum& a, const Spectrum& b) {
    double m = 0;
    for (size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

inline std::string dump_trace(const std::vector<IterationRecord>& trace) {
    std::ostringstream os;
    for (const IterationRecord& r : trace)
        os << "n=" << r.n << " eta=" << r.eta << " log_eta=" << r.log_eta << " kappa=" << r.kappa
           << " |Lambda|=" << r.lambda_size << " muB=" << r.mu_bohr << " l1K=" << r.l1_kernel
           << " smoothing_gap=" << r.smoothing_gap << " step=" << r.step_l2 << "\n";
    return os.str();
}

}  // namespace detail

inline Decomposition regularity_decompose(const Density& f, const TripleConfig& cfg, double epsilon,
                                          DecomposeMode mode) {
    const GroupSpec& g = cfg.group();
    if (f.group != g) throw argument_error("density/pattern group mismatch");
    if (!f.unit_range) throw argument_error("regularity needs a [0,1]-valued density");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw argument_error("epsilon must lie in (0,1)");
    const double delta = f.mean();
    if (!(delta > 0.0)) throw argument_error("density must have positive mean");

    const Spectrum fhat = dft(f);
    const int max_steps = static_cast<int>(std::ceil(2.0 / (epsilon * epsilon)));

    auto op_radius = [](double eta) { return std::max(eta, kRadiusFloor); };
    auto build_kernel = [&](double log_eta) {
        double eta = std::exp(log_eta);
        std::vector<int64_t> lam = detail::pushed_large_spectrum(fhat, cfg, eta / 2.0);
        return bohr_kernel(g, std::move(lam), op_radius(eta));
    };

    std::vector<IterationRecord> trace;
    double log_eta = std::log(0.5);
    Kernel k_n = build_kernel(log_eta);
    Density f_n = detail::smooth(fhat, k_n);

    std::optional<int> stop;
    std::optional<Kernel> final_kernel;
    Density f_next = f_n;  // overwritten below

    for (int n = 0; n < max_steps; ++n) {
        IterationRecord rec;
        rec.n = n;
        rec.log_eta = log_eta;
        rec.eta = op_radius(std::exp(log_eta));
        rec.lambda = k_n.support_spec.freqs;
        rec.lambda_size = static_cast<int64_t>(k_n.support_spec.freqs.size());
        rec.mu_bohr = measure(k_n.support_spec);
        rec.l1_kernel = k_n.l1_spectrum;
        rec.smoothing_gap = detail::sup_spec_diff(fhat, dft(f_n));
        if (rec.smoothing_gap > std::exp(log_eta) + 1e-9)
            throw internal_error("smoothing gap exceeded eta at n=" + std::to_string(n) + "\n" +
                                 detail::dump_trace(trace));

        double log_kappa;
        std::optional<Kernel> candidate_final;
        if (mode == DecomposeMode::faithful) {
            log_kappa = -0.5 * detail::log_nu(log_eta);
        } else {
            log_kappa = 0.5 * std::log(k_n.l1_spectrum);
        }
        rec.kappa = std::exp(log_kappa);

        // candidate final kernel at this n: support D(eps/(2 kappa_n))
        double log_eta_fin = std::log(epsilon) - std::log(2.0) - log_kappa;
        if (mode == DecomposeMode::adaptive) candidate_final = build_kernel(log_eta_fin);

        // eta_{n+1}
        double c1 = log_eta;
        double c2 = 2.0 * std::log(epsilon) - std::log(4.0) - 2.0 * log_kappa;
        double c3;
        if (mode == DecomposeMode::faithful) {
            c3 = std::log(epsilon) + detail::log_nu(log_eta_fin);
        } else {
            c3 = std::log(epsilon) - std::log(2.0) - std::log(candidate_final->l1_spectrum);
        }
        double log_eta_next = std::min({c1, c2, c3});
        if (!(log_eta_next <= log_eta + 1e-12))
            throw internal_error("eta monotonicity violated\n" + detail::dump_trace(trace));
        if (log_eta_next < -1e15 || std::isnan(log_eta_next)) log_eta_next = -1e15;

        Kernel k_next = build_kernel(log_eta_next);
        f_next = detail::smooth(fhat, k_next);
        rec.step_l2 = detail::l2_diff(f_next, f_n);
        trace.push_back(rec);

        if (rec.step_l2 <= epsilon) {
            stop = n;
            if (mode == DecomposeMode::adaptive)
                final_kernel = std::move(candidate_final);
            else
                final_kernel = build_kernel(log_eta_fin);
            break;
        }
        log_eta = log_eta_next;
        k_n = std::move(k_next);
        f_n = std::move(f_next);
    }

    if (!stop)
        throw internal_error("regularity iteration failed to stop before M=" +
                             std::to_string(max_steps) + "\n" + detail::dump_trace(trace));

    // assemble f = f_st + f_er + f_un exactly from the two smoothed stages
    std::vector<cplx> er(f.values.size()), un(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i) {
        er[i] = f_next.values[i] - f_n.values[i];
        un[i] = f.values[i] - f_next.values[i];
    }

    Decomposition d{f_n,
                    Density(g, std::move(er)),
                    Density(g, std::move(un)),
                    *final_kernel,
                    std::move(trace),
                    epsilon,
                    delta,
                    *stop,
                    mode,
                    0, 0, 0, 0, 0};

    d.c_bound = d.kernel.l1_spectrum;
    d.j_prime = weighted_triple_count(d.f_st, d.f_st, d.f_st, d.kernel, cfg);
    d.er_l2 = l2_norm(d.f_er);
    d.un_gap = detail::sup_spec_diff(fhat, dft(f_next));
    d.un_product = d.un_gap * d.kernel.l1_spectrum;

    const double cube = delta * delta * delta;
    std::string fail;
    if (!(sup_norm(d.kernel.density) <= d.c_bound + 1e-9)) fail = "||K||_inf <= C";
    if (!(sup_norm(d.f_st) <= 1.0 + 1e-9)) fail = "||f_st||_inf <= 1";
    if (!(sup_norm(d.f_er) <= 2.0 + 1e-9)) fail = "||f_er||_inf <= 2";
    if (!(sup_norm(d.f_un) <= 2.0 + 1e-9)) fail = "||f_un||_inf <= 2";
    if (!(d.j_prime > cube - epsilon)) fail = "J'(f_st) > delta^3 - eps";
    if (!(d.er_l2 < epsilon + 1e-12)) fail = "||f_er||_2 < eps";
    if (!(d.un_product < epsilon)) fail = "||fhat_un||_inf ||Khat||_1 < eps";
    if (!fail.empty())
        throw internal_error("decomposition property failed: " + fail + "\n" +
                             detail::dump_trace(d.trace));
    return d;
}

struct KhintchineResult {
    std::vector<int64_t> level_set;  // {y : I_f(y) > delta^3 - eps}
    double measure;
    double j_value;    // J(f), the mean of the fiber counts
    double threshold;  // delta^3 - eps
};

inline KhintchineResult khintchine_set(const Density& f, const TripleConfig& cfg, double epsilon) {
    if (!f.unit_range) throw argument_error("khintchine needs a [0,1]-valued density");
    const double delta = f.mean();
    Density fib = fiber_count(f, cfg);
    KhintchineResult r;
    r.threshold = delta * delta * delta - epsilon;
    cplx acc = 0;
    for (int64_t t = 0; t < f.group.cardinality(); ++t) {
        const cplx v = fib.values[static_cast<size_t>(t)];
        acc += v;
        if (v.real() > r.threshold) r.level_set.push_back(t);
    }
    r.j_value = (acc / static_cast<double>(f.group.cardinality())).real();
    r.measure = static_cast<double>(r.level_set.size()) / static_cast<double>(f.group.cardinality());
    return r;
}

struct DensityBohrResult {
    double threshold;   // c = R(0)/2
    double gap_bound;   // c' = c / C_J
    double r0;          // R(0) = J(f)
    CertifiedBohr bohr; // every member w satisfies R(w) > c
};

// Builds the Bohr set of w with R(w) > c, c = R(0)/2, via the translate Bohr
// set at the Lipschitz-derived gap bound; certified by the exhaustive R table.
inline DensityBohrResult density_bohr(const Density& f, const TripleConfig& cfg) {
    if (!f.unit_range) throw argument_error("density_bohr needs a [0,1]-valued density");
    if (!(f.mean() > 0)) throw argument_error("density must have positive mean");
    const GroupSpec& g = cfg.group();
    const double r0 = triple_count_direct(f, f, f, cfg);
    const double c = r0 / 2.0;
    const double l2 = l2_norm(f);
    const double lip = cfg.counting_constant() * l2 * l2;
    const double c_prime = c / lip;
    BohrSpec spec = translate_bohr({f}, {Endomorphism::identity(g)}, c_prime);
    std::vector<double> r_all = shifted_count_all(f, cfg);
    std::vector<int64_t> mem = members(spec);
    for (int64_t w : mem) {
        if (!(r_all[static_cast<size_t>(w)] > c))
            throw internal_error("density_bohr certificate failed at w=" + std::to_string(w));
    }
    InclusionCertificate cert{"{w : R(w) > c}",
                              fnv1a64(&c, sizeof c, hash_index_set(g, mem)),
                              static_cast<int64_t>(mem.size()), true};
    return DensityBohrResult{c, c_prime, r0, CertifiedBohr{std::move(spec), std::move(mem), cert}};
}

struct SumsetBohrResult {
    CertifiedBohr bohr;  // certified subset of phi1(A)+phi2(A)+phi3(A)
    double threshold;    // c from the underlying density_bohr
    std::vector<int64_t> recorded_indices;  // [G:phi3], [G:psi1], [G:psi2], [G:(psi1+psi2)]
};

namespace detail {

inline std::vector<int64_t> triple_sumset(const GroupSpec& g, const std::vector<int64_t>& a,
                                          const Endomorphism& p1, const Endomorphism& p2,
                                          const Endomorphism& p3) {
    const int64_t n = g.cardinality();
    auto m1 = set_to_mask(n, image_of_set(p1, a));
    auto m2 = set_to_mask(n, image_of_set(p2, a));
    auto m3 = set_to_mask(n, image_of_set(p3, a));
    auto s12 = sum_mask(g, m1, m2);
    auto s = sum_mask(g, s12, m3);
    return mask_to_set(s);
}

}  // namespace detail

// Certified Bohr subset of phi1(A)+phi2(A)+phi3(A) under the hypotheses
// (1) phi1+phi2+phi3 = 0, (2) phi1 o psi1 = phi2 o psi2 (finite indices are
// automatic here and recorded). Pattern for the R(w) pipeline is (psi1, -psi2);
// the produced Bohr set is pushed through phi3.
inline SumsetBohrResult sumset_bohr_density(const GroupSpec& g, const std::vector<int64_t>& a_set,
                                            const Endomorphism& phi1, const Endomorphism& phi2,
                                            const Endomorphism& phi3, const Endomorphism& psi1,
                                            const Endomorphism& psi2) {
    if (!(phi1 + phi2 + phi3 == Endomorphism::zero(g)))
        throw argument_error("hypothesis failed: phi1 + phi2 + phi3 != 0");
    if (!(compose(phi1, psi1) == compose(phi2, psi2)))
        throw argument_error("hypothesis failed: phi1 o psi1 != phi2 o psi2");
    if (a_set.empty()) throw argument_error("set must be nonempty");

    SumsetBohrResult out{CertifiedBohr{BohrSpec(g, {}, 1.0), {}, {}}, 0.0, {}};
    out.recorded_indices = {image_index(phi3), image_index(psi1), image_index(psi2),
                            image_index(psi1 + psi2)};

    Density f = Density::indicator(g, a_set);
    TripleConfig cfg(psi1, -psi2);
    DensityBohrResult dres = density_bohr(f, cfg);
    out.threshold = dres.threshold;

    CertifiedBohr image = image_bohr(phi3, dres.bohr.spec);
    std::vector<int64_t> target = detail::triple_sumset(g, a_set, phi1, phi2, phi3);
    out.bohr = certify_inclusion(image.spec, target, "phi1(A)+phi2(A)+phi3(A)");
    return out;
}

// The commuting special case psi1 = phi2, psi2 = phi1.
inline SumsetBohrResult sumset_bohr_density(const GroupSpec& g, const std::vector<int64_t>& a_set,
                                            const Endomorphism& phi1, const Endomorphism& phi2,
                                            const Endomorphism& phi3) {
    return sumset_bohr_density(g, a_set, phi1, phi2, phi3, phi2, phi1);
}

}  // namespace abel
