// Kernels: nonnegative mean-1 functions with nonnegative spectrum, vanishing
// outside a prescribed Bohr set, and ||Khat||_1 = ||K||_inf. Built as
// normalized products of single-frequency kernels (1_B/mu(B)) * (1_B/mu(B)).
#pragma once

#include <cmath>

#include "abel/bohr.hpp"
#include "abel/fourier.hpp"

namespace abel {

struct Kernel {
    Density density;
    BohrSpec support_spec;
    double l1_spectrum;  // = sum_gamma |Khat(gamma)| = ||K||_inf

    // Validates the kernel contract; tolerances: 1e-9 for equalities,
    // 1e-12 for spectral nonnegativity.
    Kernel(Density d, BohrSpec support) : density(std::move(d)), support_spec(std::move(support)), l1_spectrum(0) {
        if (density.group != support_spec.group) throw argument_error("kernel group mismatch");
        std::vector<uint8_t> in_support =
            detail::set_to_mask(density.group.cardinality(), members(support_spec));
        double max_val = 0.0;
        for (size_t i = 0; i < density.values.size(); ++i) {
            double re = density.values[i].real();
            if (std::abs(density.values[i].imag()) > 1e-9)
                throw internal_error("kernel has a non-real value");
            if (re < -1e-12) throw internal_error("kernel has a negative value");
            if (!in_support[i] && std::abs(re) > 1e-9)
                throw internal_error("kernel does not vanish outside its Bohr support");
            density.values[i] = cplx(std::max(re, 0.0) * (in_support[i] ? 1.0 : 0.0), 0.0);
            max_val = std::max(max_val, density.values[i].real());
        }
        if (std::abs(density.mean() - 1.0) > 1e-9) throw internal_error("kernel mean is not 1");
        Spectrum s = dft(density);
        for (const cplx& v : s.values) {
            if (v.real() < -1e-12 || std::abs(v.imag()) > 1e-9)
                throw internal_error("kernel spectrum is not nonnegative");
            l1_spectrum += std::abs(v);
        }
        if (std::abs(l1_spectrum - max_val) > 1e-9)
            throw internal_error("kernel ||Khat||_1 != ||K||_inf");
    }

    const GroupSpec& group() const { return density.group; }
    double sup() const { return l1_spectrum; }

    static Kernel uniform(const GroupSpec& g) {
        return Kernel(Density::constant(g, 1.0), BohrSpec(g, {}, 2.5));
    }
};

namespace detail {

// (1_B/mu(B)) * (1_B/mu(B)) for B = B({lambda}; eta/2); unnormalized-support
// construction used by both kernel builders. Returned density has mean 1.
inline Density single_freq_raw(const GroupSpec& g, int64_t lambda_idx, double eta) {
    BohrSpec half(g, {lambda_idx}, eta / 2.0);
    std::vector<int64_t> b = members(half);
    Density ind = Density::indicator(g, b);
    const double inv_mu = static_cast<double>(g.cardinality()) / static_cast<double>(b.size());
    for (cplx& v : ind.values) v *= inv_mu;
    return convolve(ind, ind);
}

}  // namespace detail

// Kernel supported on B({lambda}; eta) with ||K||_inf = 1/mu(B({lambda}; eta/2)).
inline Kernel single_freq_kernel(const GroupSpec& g, int64_t lambda_idx, double eta) {
    if (!(eta > 0) || eta > 2.0) throw argument_error("eta out of range");
    return Kernel(detail::single_freq_raw(g, lambda_idx, eta), BohrSpec(g, {lambda_idx}, eta));
}

// Product kernel over a frequency set, normalized to mean 1; supported on
// B(Lambda; eta), ||Khat||_1 = ||K||_inf <= prod 1/mu(B({lambda}; eta/2)).
// The running product is renormalized after each factor to keep values in
// [0, |G|] (the mathematical kernel is unchanged by positive scaling).
inline Kernel bohr_kernel(const GroupSpec& g, std::vector<int64_t> freqs, double eta) {
    if (!(eta > 0)) throw argument_error("eta must be positive");
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
    if (freqs.empty())
        return Kernel(Density::constant(g, 1.0), BohrSpec(g, {}, eta));
    Density prod = Density::constant(g, 1.0);
    for (int64_t q : freqs) {
        Density kq = detail::single_freq_raw(g, q, eta);
        for (size_t i = 0; i < prod.values.size(); ++i) {
            double v = prod.values[i].real() * kq.values[i].real();
            prod.values[i] = cplx(v < 0 && v > -1e-12 ? 0.0 : v, 0.0);
        }
        double mean = prod.mean();
        if (!(mean > 0)) throw internal_error("kernel product lost its mass");
        for (cplx& v : prod.values) v /= mean;
    }
    return Kernel(std::move(prod), BohrSpec(g, std::move(freqs), eta));
}

}  // namespace abel
