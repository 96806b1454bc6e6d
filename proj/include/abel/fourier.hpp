// Discrete Fourier analysis on GroupSpec. Forward transforms carry the 1/|G|
// normalization, so fhat(0) = mean(f) and Parseval reads
// (1/|G|) sum_x |f|^2 = sum_gamma |fhat|^2.
//
// The fast path is a per-axis transform (recursive mixed-radix splitting on
// the smallest prime factor, O(p^2) butterflies at prime p); the direct
// O(|G|^2) transform is kept as the always-correct reference.
#pragma once

#include <cassert>
#include <cmath>
#include <vector>

#include "abel/group.hpp"

namespace abel {

struct Density {
    GroupSpec group;
    std::vector<cplx> values;  // indexed by element index
    bool unit_range = false;   // flagged "function-class [0,1]"

    Density(GroupSpec g, std::vector<cplx> v) : group(std::move(g)), values(std::move(v)) {
        if (static_cast<int64_t>(values.size()) != group.cardinality())
            throw argument_error("density length must equal group cardinality");
    }

    static Density constant(const GroupSpec& g, double c) {
        Density f(g, std::vector<cplx>(static_cast<size_t>(g.cardinality()), cplx(c, 0)));
        f.unit_range = (c >= 0.0 && c <= 1.0);
        return f;
    }

    // Indicator of a set of element indices.
    static Density indicator(const GroupSpec& g, const std::vector<int64_t>& set) {
        std::vector<cplx> v(static_cast<size_t>(g.cardinality()), cplx(0, 0));
        for (int64_t i : set) v.at(static_cast<size_t>(i)) = cplx(1, 0);
        Density f(g, std::move(v));
        f.unit_range = true;
        return f;
    }

    // Real values validated into [0,1] and flagged.
    static Density unit(const GroupSpec& g, const std::vector<double>& vals) {
        std::vector<cplx> v(vals.size());
        for (size_t i = 0; i < vals.size(); ++i) {
            if (!(vals[i] >= 0.0 && vals[i] <= 1.0))
                throw argument_error("unit-range density value outside [0,1]");
            v[i] = cplx(vals[i], 0);
        }
        Density f(g, std::move(v));
        f.unit_range = true;
        return f;
    }

    double mean() const {
        cplx s = 0;
        for (const cplx& v : values) s += v;
        return (s / static_cast<double>(group.cardinality())).real();
    }
};

struct Spectrum {
    GroupSpec group;
    std::vector<cplx> values;  // indexed by dual element index

    Spectrum(GroupSpec g, std::vector<cplx> v) : group(std::move(g)), values(std::move(v)) {
        if (static_cast<int64_t>(values.size()) != group.cardinality())
            throw argument_error("spectrum length must equal group cardinality");
    }
};

namespace detail {

inline int64_t smallest_prime_factor(int64_t n) {
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// In-place length-n transform, sign = -1 forward / +1 inverse, unnormalized.
inline void line_transform(std::vector<cplx>& v, int sign) {
    const int64_t n = static_cast<int64_t>(v.size());
    if (n <= 1) return;
    const int64_t p = smallest_prime_factor(n);
    if (p == n) {
        // prime length: direct with a twiddle table
        std::vector<cplx> tw(static_cast<size_t>(n));
        for (int64_t j = 0; j < n; ++j)
            tw[static_cast<size_t>(j)] =
                std::polar(1.0, sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n));
        std::vector<cplx> out(static_cast<size_t>(n), cplx(0, 0));
        for (int64_t k = 0; k < n; ++k) {
            cplx acc = 0;
            int64_t jk = 0;
            for (int64_t j = 0; j < n; ++j) {
                acc += v[static_cast<size_t>(j)] * tw[static_cast<size_t>(jk)];
                jk += k;
                if (jk >= n) jk -= n;
            }
            out[static_cast<size_t>(k)] = acc;
        }
        v.swap(out);
        return;
    }
    // n = p * m: decimate by p, recurse, then recombine with twiddles.
    const int64_t m = n / p;
    std::vector<std::vector<cplx>> sub(static_cast<size_t>(p));
    for (int64_t t = 0; t < p; ++t) {
        sub[static_cast<size_t>(t)].resize(static_cast<size_t>(m));
        for (int64_t q = 0; q < m; ++q)
            sub[static_cast<size_t>(t)][static_cast<size_t>(q)] = v[static_cast<size_t>(q * p + t)];
        line_transform(sub[static_cast<size_t>(t)], sign);
    }
    for (int64_t k = 0; k < n; ++k) {
        cplx acc = 0;
        for (int64_t t = 0; t < p; ++t) {
            cplx w = std::polar(1.0, sign * kTwoPi * static_cast<double>((t * k) % n) /
                                         static_cast<double>(n));
            acc += w * sub[static_cast<size_t>(t)][static_cast<size_t>(k % m)];
        }
        v[static_cast<size_t>(k)] = acc;
    }
}

// Apply line_transform along every axis of the mixed-radix cube.
inline void cube_transform(std::vector<cplx>& data, const GroupSpec& g, int sign) {
    const int64_t n = g.cardinality();
    const size_t k = g.rank();
    std::vector<int64_t> strides(k, 1);
    for (size_t i = k; i-- > 1;) strides[i - 1] = strides[i] * g.order(i);
    for (size_t axis = 0; axis < k; ++axis) {
        const int64_t len = g.order(axis);
        if (len == 1) continue;
        const int64_t stride = strides[axis];
        const int64_t block = stride * len;
        std::vector<cplx> line(static_cast<size_t>(len));
        for (int64_t base = 0; base < n; base += block) {
            for (int64_t off = 0; off < stride; ++off) {
                for (int64_t j = 0; j < len; ++j)
                    line[static_cast<size_t>(j)] = data[static_cast<size_t>(base + off + j * stride)];
                line_transform(line, sign);
                for (int64_t j = 0; j < len; ++j)
                    data[static_cast<size_t>(base + off + j * stride)] = line[static_cast<size_t>(j)];
            }
        }
    }
}

}  // namespace detail

inline Spectrum dft(const Density& f) {
    std::vector<cplx> v = f.values;
    detail::cube_transform(v, f.group, -1);
    const double inv = 1.0 / static_cast<double>(f.group.cardinality());
    for (cplx& z : v) z *= inv;
    return Spectrum(f.group, std::move(v));
}

inline Density idft(const Spectrum& s) {
    std::vector<cplx> v = s.values;
    detail::cube_transform(v, s.group, +1);
    return Density(s.group, std::move(v));
}

// Reference O(|G|^2) transform.
inline Spectrum dft_direct(const Density& f) {
    const GroupSpec& g = f.group;
    const int64_t n = g.cardinality();
    std::vector<cplx> out(static_cast<size_t>(n), cplx(0, 0));
    for (int64_t gi = 0; gi < n; ++gi) {
        DualElement a{g.element_at(gi).coords};
        cplx acc = 0;
        for (int64_t x = 0; x < n; ++x)
            acc += f.values[static_cast<size_t>(x)] * std::conj(g.character(a, g.element_at(x)));
        out[static_cast<size_t>(gi)] = acc / static_cast<double>(n);
    }
    return Spectrum(g, std::move(out));
}

// (f*g)(x) = (1/|G|) sum_y f(y) g(x-y); spectra multiply.
inline Density convolve(const Density& f, const Density& g) {
    if (f.group != g.group) throw argument_error("convolution group mismatch");
    Spectrum fs = dft(f), gs = dft(g);
    for (size_t i = 0; i < fs.values.size(); ++i) fs.values[i] *= gs.values[i];
    return idft(Spectrum(f.group, std::move(fs.values)));
}

inline Density convolve_direct(const Density& f, const Density& g) {
    if (f.group != g.group) throw argument_error("convolution group mismatch");
    const GroupSpec& gr = f.group;
    const int64_t n = gr.cardinality();
    std::vector<cplx> out(static_cast<size_t>(n), cplx(0, 0));
    for (int64_t x = 0; x < n; ++x) {
        cplx acc = 0;
        for (int64_t y = 0; y < n; ++y)
            acc += f.values[static_cast<size_t>(y)] * g.values[static_cast<size_t>(gr.sub_index(x, y))];
        out[static_cast<size_t>(x)] = acc / static_cast<double>(n);
    }
    return Density(gr, std::move(out));
}

// f_t(x) = f(x + t)
inline Density translate(const Density& f, int64_t t_idx) {
    const GroupSpec& g = f.group;
    const int64_t n = g.cardinality();
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int64_t x = 0; x < n; ++x)
        out[static_cast<size_t>(x)] = f.values[static_cast<size_t>(g.add_index(x, t_idx))];
    Density r(g, std::move(out));
    r.unit_range = f.unit_range;
    return r;
}

inline double sup_norm(const Spectrum& s) {
    double m = 0;
    for (const cplx& v : s.values) m = std::max(m, std::abs(v));
    return m;
}

inline double l1_norm(const Spectrum& s) {
    double m = 0;
    for (const cplx& v : s.values) m += std::abs(v);
    return m;
}

inline double sup_norm(const Density& f) {
    double m = 0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

// L^2 norm against the probability measure: sqrt(mean |f|^2).
inline double l2_norm(const Density& f) {
    double s = 0;
    for (const cplx& v : f.values) s += std::norm(v);
    return std::sqrt(s / static_cast<double>(f.group.cardinality()));
}

inline double l1_norm(const Density& f) {
    double s = 0;
    for (const cplx& v : f.values) s += std::abs(v);
    return s / static_cast<double>(f.group.cardinality());
}

// sup_gamma |fhat(gamma)| |1 - chi_gamma(t)|, identically ||fhat - fhat_t||_inf.
inline double translate_gap_spectrum(const Spectrum& s, int64_t t_idx) {
    const GroupSpec& g = s.group;
    const int64_t n = g.cardinality();
    Element t = g.element_at(t_idx);
    double m = 0;
    for (int64_t gi = 0; gi < n; ++gi) {
        double a = std::abs(s.values[static_cast<size_t>(gi)]);
        if (a == 0.0) continue;
        DualElement d{g.element_at(gi).coords};
        m = std::max(m, a * g.char_dist(d, t));
    }
    return m;
}

inline double translate_gap(const Density& f, int64_t t_idx) {
    return translate_gap_spectrum(dft(f), t_idx);
}

inline double translate_gap(const Density& f, const Element& t) {
    return translate_gap(f, f.group.index_of(t));
}

}  // namespace abel
