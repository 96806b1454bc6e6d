// Finite-stage transfer machinery: wraparound-free embeddings of integer
// intervals into cyclic groups, Gaussian-integer grids into Z_{N'} x Z_{N'},
// and F_p[t] truncations into quotient rings, plus the interval pattern
// counters. Every returned Bohr set / subspace carries an enumeration
// certificate against the corresponding non-wrapped (integer-level) sumset.
//
// The interval embedding uses N' = smallest odd integer > (3 s1 + s2) N: with
// members in [-N, N] this forces every congruence
// s1 w = s1 a' - s1 a'' + s2 a (mod N') to be an equality in Z, which the
// exhaustive lifting check verifies.
#pragma once

#include <cmath>
#include <set>

#include "abel/partition.hpp"
#include "abel/regularity.hpp"

namespace abel {

struct IntervalSet {
    int64_t n;                     // half-width N
    std::vector<int64_t> members;  // subset of [-N, N], sorted unique

    IntervalSet(int64_t half_width, std::vector<int64_t> m) : n(half_width), members(std::move(m)) {
        if (n < 0) throw argument_error("interval half-width must be nonnegative");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int64_t v : members)
            if (v < -n || v > n) throw argument_error("interval member out of [-N, N]");
    }
};

// Symmetric representative of a residue class of odd N'.
inline int64_t symmetric_rep(int64_t n_prime, int64_t residue) {
    residue %= n_prime;
    if (residue < 0) residue += n_prime;
    return residue > (n_prime - 1) / 2 ? residue - n_prime : residue;
}

inline int64_t to_residue(int64_t n_prime, int64_t value) {
    int64_t r = value % n_prime;
    return r < 0 ? r + n_prime : r;
}

struct EmbedResult {
    GroupSpec group;            // Z_{N'}
    std::vector<int64_t> set;   // embedded member residues (element indices)
    int64_t n_prime;
    int64_t s1, s2;
};

inline int64_t interval_embed_modulus(int64_t n, int64_t s1, int64_t s2) {
    int64_t np = (3 * std::abs(s1) + std::abs(s2)) * n + 1;
    if (np % 2 == 0) ++np;
    return np;
}

inline EmbedResult embed_interval(const IntervalSet& a, int64_t s1, int64_t s2) {
    if (s1 == 0 || s2 == 0) throw argument_error("coefficients must be nonzero");
    s1 = std::abs(s1);
    s2 = std::abs(s2);
    const int64_t np = interval_embed_modulus(a.n, s1, s2);
    GroupSpec g({np});
    std::vector<int64_t> set;
    for (int64_t v : a.members) set.push_back(to_residue(np, v));
    std::sort(set.begin(), set.end());
    return EmbedResult{std::move(g), std::move(set), np, s1, s2};
}

// Exhaustive wraparound-freeness check: every congruence
// s1 w = s1 a' - s1 a'' + s2 a (mod n_prime) with |w|,|a|,|a'|,|a''| <= N
// must be an equality over Z.
inline bool lifting_exhaustive_check(int64_t n, int64_t s1, int64_t s2, int64_t n_prime) {
    for (int64_t w = -n; w <= n; ++w)
        for (int64_t a = -n; a <= n; ++a)
            for (int64_t ap = -n; ap <= n; ++ap)
                for (int64_t app = -n; app <= n; ++app) {
                    int64_t lhs = s1 * w;
                    int64_t rhs = s1 * ap - s1 * app + s2 * a;
                    if ((lhs - rhs) % n_prime == 0 && lhs != rhs) return false;
                }
    return true;
}

struct IntervalCount {
    size_t winner;                  // argmax class (ties -> lowest)
    int64_t count;                  // winner's pattern count
    std::vector<int64_t> per_class;
    int64_t n;
};

// Counts monochromatic {l y, x, x+y, ..., x+ky} patterns with |x|,|y| <= N in
// each class of a partition of [-N, N]; indicators vanish outside the interval.
inline IntervalCount brauer_interval_count(const std::vector<std::vector<int64_t>>& partition,
                                           int64_t n, int64_t k, int64_t l) {
    if (k < 1) throw argument_error("pattern length k must be >= 1");
    const int64_t width = 2 * n + 1;
    std::vector<int64_t> cls(static_cast<size_t>(width), -1);
    for (size_t i = 0; i < partition.size(); ++i)
        for (int64_t v : partition[i]) {
            if (v < -n || v > n || cls[static_cast<size_t>(v + n)] != -1)
                throw argument_error("classes must be disjoint subsets of [-N, N]");
            cls[static_cast<size_t>(v + n)] = static_cast<int64_t>(i);
        }
    for (int64_t v = 0; v < width; ++v)
        if (cls[static_cast<size_t>(v)] == -1)
            throw argument_error("partition does not cover [-N, N]");

    auto class_of = [&](int64_t v) -> int64_t {
        return (v < -n || v > n) ? -1 : cls[static_cast<size_t>(v + n)];
    };

    IntervalCount out;
    out.n = n;
    out.per_class.assign(partition.size(), 0);
    for (int64_t y = -n; y <= n; ++y) {
        const int64_t c0 = class_of(l * y);
        if (c0 < 0) continue;
        for (int64_t x = -n; x <= n; ++x) {
            if (class_of(x) != c0) continue;
            bool all = true;
            for (int64_t j = 1; j <= k; ++j) {
                if (class_of(x + j * y) != c0) {
                    all = false;
                    break;
                }
            }
            if (all) ++out.per_class[static_cast<size_t>(c0)];
        }
    }
    out.winner = 0;
    for (size_t i = 1; i < out.per_class.size(); ++i)
        if (out.per_class[i] > out.per_class[out.winner]) out.winner = i;
    out.count = out.per_class[out.winner];
    return out;
}

struct DiagonalPick {
    size_t winner;               // majority index over the k ladder
    std::vector<size_t> per_k;
    bool heuristic = true;       // finite-scale surrogate for the pigeonhole
};

// Runs brauer_interval_count with l = 1 for each k in the ladder and returns
// the index recurring most often (ties -> lowest).
inline DiagonalPick diagonal_pick(const std::vector<std::vector<int64_t>>& partition, int64_t n,
                                  const std::vector<int64_t>& k_ladder) {
    if (k_ladder.empty()) throw argument_error("empty k ladder");
    DiagonalPick out;
    std::vector<size_t> votes(partition.size(), 0);
    for (int64_t k : k_ladder) {
        IntervalCount c = brauer_interval_count(partition, n, k, 1);
        out.per_k.push_back(c.winner);
        ++votes[c.winner];
    }
    out.winner = 0;
    for (size_t i = 1; i < votes.size(); ++i)
        if (votes[i] > votes[out.winner]) out.winner = i;
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian integers: Z[i] identified with Z^2; multiplication by s = u + vi
// acts on Z_{N'} x Z_{N'} through the matrix [[u, -v], [v, u]].
// ---------------------------------------------------------------------------

struct GaussianInt {
    int64_t re = 0;
    int64_t im = 0;
    bool operator==(const GaussianInt&) const = default;
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool is_zero() const { return re == 0 && im == 0; }
    int64_t l1() const { return std::abs(re) + std::abs(im); }
};

struct GaussianGrid {
    int64_t n;                          // box half-width
    std::vector<GaussianInt> members;   // subset of [-N, N]^2

    GaussianGrid(int64_t half_width, std::vector<GaussianInt> m)
        : n(half_width), members(std::move(m)) {
        for (const GaussianInt& z : members)
            if (std::abs(z.re) > n || std::abs(z.im) > n)
                throw argument_error("grid member out of [-N, N]^2");
    }
};

inline Endomorphism multiplier_matrix(const GroupSpec& g, const GaussianInt& s) {
    if (g.rank() != 2 || g.order(0) != g.order(1))
        throw argument_error("Gaussian multiplier needs Z_N x Z_N");
    return Endomorphism(g, {s.re, -s.im, s.im, s.re});
}

struct GaussianSumsetResult {
    int64_t n_prime;
    GroupSpec group;                    // Z_{N'} x Z_{N'}
    SumsetBohrResult inner;             // certified vs the in-group sumset
    InclusionCertificate integer_cert;  // symmetric reps land in the Z[i] sumset
};

// Density pipeline over Z[i] at one finite stage. N' = 2 (sum of l1 norms) N + 1
// makes every in-group sumset residue's symmetric representative an honest
// integer sumset value, so the certificate needs no box restriction.
inline GaussianSumsetResult gaussian_sumset_bohr(const GaussianGrid& a, const GaussianInt& s1,
                                                 const GaussianInt& s2, const GaussianInt& s3) {
    if (!((s1 + s2 + s3).is_zero())) throw argument_error("hypothesis failed: s1 + s2 + s3 != 0");
    if (s1.is_zero() || s2.is_zero() || s3.is_zero())
        throw argument_error("coefficients must be nonzero");
    if (a.members.empty()) throw argument_error("grid set must be nonempty");

    const int64_t np = 2 * (s1.l1() + s2.l1() + s3.l1()) * a.n + 1;
    GroupSpec g({np, np});
    std::vector<int64_t> set;
    for (const GaussianInt& z : a.members)
        set.push_back(g.index_of(Element{{to_residue(np, z.re), to_residue(np, z.im)}}));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    Endomorphism p1 = multiplier_matrix(g, s1);
    Endomorphism p2 = multiplier_matrix(g, s2);
    Endomorphism p3 = multiplier_matrix(g, s3);
    SumsetBohrResult inner = sumset_bohr_density(g, set, p1, p2, p3);

    // integer-level sumset over Z[i], held in a box mask of half-width (N'-1)/2
    const int64_t half = (np - 1) / 2;
    const int64_t box = 2 * half + 1;
    std::vector<uint8_t> int_sum(static_cast<size_t>(box * box), 0);
    std::vector<GaussianInt> t12;
    {
        std::vector<uint8_t> seen(static_cast<size_t>(box * box), 0);
        for (const GaussianInt& x : a.members)
            for (const GaussianInt& y : a.members) {
                GaussianInt v = s1 * x + s2 * y;
                size_t key = static_cast<size_t>((v.re + half) * box + (v.im + half));
                if (!seen[key]) {
                    seen[key] = 1;
                    t12.push_back(v);
                }
            }
    }
    for (const GaussianInt& v : t12)
        for (const GaussianInt& z : a.members) {
            GaussianInt w = v + s3 * z;
            int_sum[static_cast<size_t>((w.re + half) * box + (w.im + half))] = 1;
        }

    int64_t checked = 0;
    for (int64_t idx : inner.bohr.member_idx) {
        Element e = g.element_at(idx);
        int64_t wr = symmetric_rep(np, e.coords[0]);
        int64_t wi = symmetric_rep(np, e.coords[1]);
        if (!int_sum[static_cast<size_t>((wr + half) * box + (wi + half))])
            throw certification_error("Gaussian lifting certificate failed at (" +
                                      std::to_string(wr) + "," + std::to_string(wi) + ")");
        ++checked;
    }
    InclusionCertificate cert{"s1 A + s2 A + s3 A over Z[i]",
                              hash_index_set(g, inner.bohr.member_idx), checked, true};
    return GaussianSumsetResult{np, std::move(g), std::move(inner), std::move(cert)};
}

namespace detail {

// Shared core of the partition-transfer variants: classes already embedded in
// the quotient group, pattern R_i(w) = iint f(mult_s1 y) f(x+w) f(x+mult_s2 y),
// winner by R_i(0), translate-Bohr at the Lipschitz gap, image under mult_s1,
// certified against the in-group set s1 A_i - s1 A_i + s2 A_i.
struct EmbeddedPartitionBohr {
    size_t winner;
    double r0;
    double threshold;
    CertifiedBohr bohr;                 // in-group certificate
    std::vector<int64_t> w_members;     // members of the w-space Bohr set
    std::vector<int64_t> target;        // s1 A_i - s1 A_i + s2 A_i, sorted
};

inline EmbeddedPartitionBohr embedded_partition_bohr(
    const GroupSpec& g, const std::vector<std::vector<int64_t>>& classes,
    const Endomorphism& mult_s1, const Endomorphism& mult_s2) {
    TripleConfig cfg(mult_s2, mult_s1);  // phi = mult_s2 (shifted slot), psi = mult_s1
    size_t winner = 0;
    double r0 = -1.0;
    for (size_t i = 0; i < classes.size(); ++i) {
        Density fi = Density::indicator(g, classes[i]);
        double ri = mixed_count(fi, fi, fi, cfg);
        if (ri > r0) {
            r0 = ri;
            winner = i;
        }
    }
    if (!(r0 > 0.0)) throw internal_error("no class carries the pattern at w = 0");
    Density f = Density::indicator(g, classes[winner]);
    const double c = r0 / 2.0;
    const double l2 = l2_norm(f);
    const double c_prime = c / (cfg.counting_constant() * l2 * l2);
    BohrSpec w_spec = translate_bohr({f}, {Endomorphism::identity(g)}, c_prime);
    std::vector<double> r_all = semi_shifted_count_all(f, cfg);
    std::vector<int64_t> w_members = members(w_spec);
    for (int64_t w : w_members)
        if (!(r_all[static_cast<size_t>(w)] > c))
            throw internal_error("embedded partition certificate failed at w=" + std::to_string(w));
    CertifiedBohr image = image_bohr(mult_s1, w_spec);
    auto m1 = set_to_mask(g.cardinality(), image_of_set(mult_s1, classes[winner]));
    auto m2 = set_to_mask(g.cardinality(), image_of_set(mult_s2, classes[winner]));
    auto target = mask_to_set(sum_mask(g, difference_mask(g, m1, m1), m2));
    CertifiedBohr cert = certify_inclusion(image.spec, target, "s1 A_i - s1 A_i + s2 A_i");
    return EmbeddedPartitionBohr{winner, r0, c, std::move(cert), std::move(w_members),
                                 std::move(target)};
}

}  // namespace detail

struct GaussianPartitionBohrResult {
    int64_t n_prime;
    GroupSpec group;
    size_t winner;
    double r0;
    double threshold;
    CertifiedBohr bohr;                 // in-group: inside s1 A_i - s1 A_i + s2 A_i (mod N')
    InclusionCertificate integer_cert;  // boxed w-members lift to Z[i]
};

// Partition variant over Z[i] at one finite stage: partition of the grid
// [-N, N]^2, embedded at N' = smallest odd > (3 l1(s1) + l1(s2)) N so that
// w-members inside the box lift to honest Z[i] identities.
inline GaussianPartitionBohrResult gaussian_partition_bohr(
    int64_t n, const std::vector<std::vector<GaussianInt>>& grid_partition, const GaussianInt& s1,
    const GaussianInt& s2) {
    if (s1.is_zero() || s2.is_zero()) throw argument_error("coefficients must be nonzero");
    int64_t np = (3 * s1.l1() + s2.l1()) * n + 1;
    if (np % 2 == 0) ++np;
    GroupSpec g({np, np});
    std::vector<std::vector<int64_t>> classes;
    for (const auto& cls : grid_partition) {
        std::vector<int64_t> c;
        for (const GaussianInt& z : cls) {
            if (std::abs(z.re) > n || std::abs(z.im) > n)
                throw argument_error("grid member out of [-N, N]^2");
            c.push_back(g.index_of(Element{{to_residue(np, z.re), to_residue(np, z.im)}}));
        }
        std::sort(c.begin(), c.end());
        classes.push_back(std::move(c));
    }
    Endomorphism m1 = multiplier_matrix(g, s1);
    Endomorphism m2 = multiplier_matrix(g, s2);
    detail::EmbeddedPartitionBohr core = detail::embedded_partition_bohr(g, classes, m1, m2);

    // integer-level certificate for boxed w-members: s1 w in s1 A - s1 A + s2 A
    const auto& win = grid_partition[core.winner];
    std::set<std::pair<int64_t, int64_t>> int_sum;
    for (const GaussianInt& a : win)
        for (const GaussianInt& b : win)
            for (const GaussianInt& cpt : win) {
                GaussianInt v{s1.re * (a.re - b.re) - s1.im * (a.im - b.im) + s2.re * cpt.re -
                                  s2.im * cpt.im,
                              s1.re * (a.im - b.im) + s1.im * (a.re - b.re) + s2.re * cpt.im +
                                  s2.im * cpt.re};
                int_sum.insert({v.re, v.im});
            }
    int64_t checked = 0;
    for (int64_t w : core.w_members) {
        Element e = g.element_at(w);
        GaussianInt wz{symmetric_rep(np, e.coords[0]), symmetric_rep(np, e.coords[1])};
        if (std::abs(wz.re) > n || std::abs(wz.im) > n) continue;
        GaussianInt sw = s1 * wz;
        if (!int_sum.count({sw.re, sw.im}))
            throw certification_error("Gaussian partition lifting failed at (" +
                                      std::to_string(wz.re) + "," + std::to_string(wz.im) + ")");
        ++checked;
    }
    InclusionCertificate icert{"s1 A_i - s1 A_i + s2 A_i over Z[i] (boxed members)",
                               hash_index_set(g, core.w_members), checked, true};
    return GaussianPartitionBohrResult{np,      std::move(g),         core.winner,
                                       core.r0, core.threshold,       std::move(core.bohr),
                                       std::move(icert)};
}

// ---------------------------------------------------------------------------
// F_p[t] quotients: G_N = { f : deg f < N } = Z_p^N with coordinates the
// coefficients of 1, t, ..., t^{N-1}; multiplication by a polynomial s is an
// F_p-linear endomorphism of F_p[t]/(P_N).
// ---------------------------------------------------------------------------

inline bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as little-endian coefficient vectors.
struct PolyQuotient {
    int64_t p;
    int64_t n;                     // truncation degree: group = Z_p^n
    std::vector<int64_t> modulus;  // monic, degree n, little-endian (default t^n)
    GroupSpec group;

    PolyQuotient(int64_t prime, int64_t deg, std::vector<int64_t> mod = {})
        : p(prime), n(deg), modulus(std::move(mod)), group(make_group(prime, deg)) {
        if (!is_prime(p)) throw argument_error("p must be prime");
        if (n < 1) throw argument_error("degree must be >= 1");
        if (modulus.empty()) {
            modulus.assign(static_cast<size_t>(n + 1), 0);
            modulus[static_cast<size_t>(n)] = 1;  // t^n
        }
        if (static_cast<int64_t>(modulus.size()) != n + 1 ||
            modulus[static_cast<size_t>(n)] % p != 1)
            throw argument_error("modulus must be monic of degree n");
        for (int64_t& c : modulus) c = ((c % p) + p) % p;
    }

    static GroupSpec make_group(int64_t p, int64_t n) {
        return GroupSpec(std::vector<int64_t>(static_cast<size_t>(n), p));
    }

    static int64_t degree(const std::vector<int64_t>& poly) {
        for (size_t i = poly.size(); i-- > 0;)
            if (poly[i] != 0) return static_cast<int64_t>(i);
        return -1;
    }

    std::vector<int64_t> reduce_poly(std::vector<int64_t> f) const {
        for (int64_t& c : f) c = ((c % p) + p) % p;
        while (static_cast<int64_t>(f.size()) > n) {
            size_t d = f.size() - 1;
            int64_t lead = f[d];
            if (lead != 0) {
                // subtract lead * t^{d-n} * modulus
                for (size_t j = 0; j <= static_cast<size_t>(n); ++j) {
                    size_t pos = d - static_cast<size_t>(n) + j;
                    f[pos] = ((f[pos] - lead * modulus[j]) % p + p) % p;
                }
            }
            f.pop_back();
        }
        f.resize(static_cast<size_t>(n), 0);
        return f;
    }

    // multiplication-by-s as an endomorphism of the additive group
    Endomorphism mult_matrix(const std::vector<int64_t>& s) const {
        size_t k = static_cast<size_t>(n);
        std::vector<int64_t> m(k * k, 0);
        for (size_t j = 0; j < k; ++j) {
            std::vector<int64_t> col(static_cast<size_t>(j), 0);  // s * t^j
            for (int64_t c : s) col.push_back(c);
            col = reduce_poly(std::move(col));
            for (size_t i = 0; i < k; ++i) m[i * k + j] = col[i];
        }
        return Endomorphism(group, std::move(m));
    }

    int64_t index_of_poly(const std::vector<int64_t>& f) const {
        Element e;
        e.coords.assign(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < f.size() && i < static_cast<size_t>(n); ++i)
            e.coords[i] = ((f[i] % p) + p) % p;
        return group.index_of(e);
    }
};

struct SubspaceResult {
    PolyQuotient quotient;                    // the embedded stage (p, N')
    std::vector<std::vector<int64_t>> basis;  // coefficient rows of basis vectors
    int64_t codimension;
    std::vector<int64_t> subspace;            // enumerated subspace element indices
    SumsetBohrResult inner;
    InclusionCertificate cert;                // subspace in s1 A + s2 A + s3 A
};

namespace detail {

// Null space basis of the freq rows over F_p; returns (basis, rank).
inline std::pair<std::vector<std::vector<int64_t>>, int64_t> nullspace_mod_p(
    std::vector<std::vector<int64_t>> rows, int64_t p, int64_t ncols) {
    auto inv_mod = [&](int64_t a) {
        int64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int64_t rank = 0;
    std::vector<int64_t> pivot_col;
    for (int64_t col = 0; col < ncols && rank < static_cast<int64_t>(rows.size()); ++col) {
        int64_t sel = -1;
        for (int64_t r = rank; r < static_cast<int64_t>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] % p != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(sel)]);
        int64_t inv = inv_mod(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int64_t c = 0; c < ncols; ++c)
            rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] * inv % p;
        for (int64_t r = 0; r < static_cast<int64_t>(rows.size()); ++r) {
            if (r == rank) continue;
            int64_t factor = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] % p;
            if (factor == 0) continue;
            for (int64_t c = 0; c < ncols; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    ((rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                      factor * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)]) %
                         p +
                     p) %
                    p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<std::vector<int64_t>> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int64_t c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int64_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<int64_t> v(static_cast<size_t>(ncols), 0);
        v[static_cast<size_t>(free_col)] = 1;
        for (int64_t r = 0; r < rank; ++r) {
            int64_t pc = pivot_col[static_cast<size_t>(r)];
            int64_t coef = rows[static_cast<size_t>(r)][static_cast<size_t>(free_col)] % p;
            v[static_cast<size_t>(pc)] = ((-coef) % p + p) % p;
        }
        basis.push_back(std::move(v));
    }
    return {std::move(basis), rank};
}

}  // namespace detail

// Density pipeline over F_p[t] at one finite stage: embed G_N into the
// quotient at N' = max deg(s_i) + N (degree bounds make every in-group sum an
// honest F_p[t] identity), run the density pipeline, then convert the Bohr
// set into the F_p-subspace cut out by its frequencies.
inline SubspaceResult polyquot_sumset_subspace(int64_t p, int64_t n,
                                               const std::vector<int64_t>& a_coeff_idx,
                                               const std::vector<int64_t>& s1,
                                               const std::vector<int64_t>& s2,
                                               const std::vector<int64_t>& s3) {
    if (PolyQuotient::degree(s1) < 0 || PolyQuotient::degree(s2) < 0 ||
        PolyQuotient::degree(s3) < 0)
        throw argument_error("coefficients must be nonzero polynomials");
    // s1 + s2 + s3 = 0 over F_p[t]
    {
        size_t len = std::max({s1.size(), s2.size(), s3.size()});
        for (size_t i = 0; i < len; ++i) {
            int64_t c = (i < s1.size() ? s1[i] : 0) + (i < s2.size() ? s2[i] : 0) +
                        (i < s3.size() ? s3[i] : 0);
            if (((c % p) + p) % p != 0)
                throw argument_error("hypothesis failed: s1 + s2 + s3 != 0 in F_p[t]");
        }
    }
    const int64_t dmax =
        std::max({PolyQuotient::degree(s1), PolyQuotient::degree(s2), PolyQuotient::degree(s3)});
    PolyQuotient pq(p, n + dmax);
    PolyQuotient base(p, n);

    // embed A from G_N into G_{N'}
    std::vector<int64_t> set;
    for (int64_t idx : a_coeff_idx) {
        Element e = base.group.element_at(idx);
        std::vector<int64_t> f(e.coords.begin(), e.coords.end());
        set.push_back(pq.index_of_poly(f));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    Endomorphism p1 = pq.mult_matrix(s1);
    Endomorphism p2 = pq.mult_matrix(s2);
    Endomorphism p3 = pq.mult_matrix(s3);
    SumsetBohrResult inner = sumset_bohr_density(pq.group, set, p1, p2, p3);

    // convert: the subspace cut out by the Bohr frequencies (any radius at or
    // below |e(1/p)-1| pins characters to 1 on an exponent-p group)
    std::vector<std::vector<int64_t>> rows;
    for (int64_t q : inner.bohr.spec.freqs) {
        Element e = pq.group.element_at(q);
        rows.emplace_back(e.coords.begin(), e.coords.end());
    }
    auto [basis, rank] = detail::nullspace_mod_p(std::move(rows), p, pq.n);

    // enumerate the subspace from the basis
    std::vector<int64_t> subspace;
    {
        std::vector<int64_t> combo(basis.size(), 0);
        while (true) {
            std::vector<int64_t> v(static_cast<size_t>(pq.n), 0);
            for (size_t b = 0; b < basis.size(); ++b)
                for (size_t c = 0; c < v.size(); ++c)
                    v[c] = (v[c] + combo[b] * basis[b][c]) % p;
            subspace.push_back(pq.index_of_poly(v));
            size_t j = 0;
            while (j < combo.size() && combo[j] == p - 1) combo[j++] = 0;
            if (j == combo.size()) break;
            ++combo[j];
        }
        std::sort(subspace.begin(), subspace.end());
        subspace.erase(std::unique(subspace.begin(), subspace.end()), subspace.end());
    }

    // certificate: subspace within the (non-wrapped, by degrees) sumset
    std::vector<int64_t> target = detail::triple_sumset(pq.group, set, p1, p2, p3);
    int64_t checked = 0;
    for (int64_t v : subspace) {
        if (!std::binary_search(target.begin(), target.end(), v))
            throw certification_error("subspace certificate failed at index " + std::to_string(v));
        ++checked;
    }
    InclusionCertificate cert{"s1 A + s2 A + s3 A over F_p[t]", hash_index_set(pq.group, target),
                              checked, true};
    return SubspaceResult{std::move(pq), std::move(basis), rank,
                          std::move(subspace), std::move(inner), std::move(cert)};
}

struct PolyPartitionBohrResult {
    PolyQuotient quotient;  // the embedded stage (p, N')
    size_t winner;
    double r0;
    double threshold;
    CertifiedBohr bohr;              // in-group certificate
    InclusionCertificate poly_cert;  // deg < N members lift to F_p[t] identities
};

// Partition variant over F_p[t] at one finite stage: partition of G_N,
// embedded at N' = max(deg s1, deg s2) + N; degree bounds make the lift of
// low-degree members exact.
inline PolyPartitionBohrResult polyquot_partition_bohr(
    int64_t p, int64_t n, const std::vector<std::vector<int64_t>>& partition,
    const std::vector<int64_t>& s1, const std::vector<int64_t>& s2) {
    int64_t d1 = PolyQuotient::degree(s1), d2 = PolyQuotient::degree(s2);
    if (d1 < 0 || d2 < 0) throw argument_error("coefficients must be nonzero polynomials");
    PolyQuotient base(p, n);
    PolyQuotient pq(p, n + std::max(d1, d2));
    std::vector<std::vector<int64_t>> classes;
    for (const auto& cls : partition) {
        std::vector<int64_t> c;
        for (int64_t idx : cls) {
            Element e = base.group.element_at(idx);
            c.push_back(pq.index_of_poly(std::vector<int64_t>(e.coords.begin(), e.coords.end())));
        }
        std::sort(c.begin(), c.end());
        classes.push_back(std::move(c));
    }
    Endomorphism m1 = pq.mult_matrix(s1);
    Endomorphism m2 = pq.mult_matrix(s2);
    detail::EmbeddedPartitionBohr core = detail::embedded_partition_bohr(pq.group, classes, m1, m2);

    // polynomial-level certificate: for members of degree < N both s1*w and
    // every sumset element stay below degree N', so the in-group membership
    // of s1*w is an identity in F_p[t]
    int64_t checked = 0;
    for (int64_t w : core.w_members) {
        Element e = pq.group.element_at(w);
        bool low_degree = true;
        for (size_t i = static_cast<size_t>(n); i < e.coords.size(); ++i)
            if (e.coords[i] != 0) low_degree = false;
        if (!low_degree) continue;
        int64_t sw = m1.apply_index(w);
        if (!std::binary_search(core.target.begin(), core.target.end(), sw))
            throw certification_error("polynomial partition lifting failed at index " +
                                      std::to_string(w));
        ++checked;
    }
    InclusionCertificate pcert{"s1 A_i - s1 A_i + s2 A_i over F_p[t] (deg < N members)",
                               hash_index_set(pq.group, core.w_members), checked, true};
    return PolyPartitionBohrResult{std::move(pq),  core.winner,          core.r0,
                                   core.threshold, std::move(core.bohr), std::move(pcert)};
}

}  // namespace abel
