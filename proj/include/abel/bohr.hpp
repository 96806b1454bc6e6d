// Bohr sets B(Lambda; eta) = { x : |chi(x) - 1| < eta for all chi in Lambda }
// with exact membership enumeration (strict inequality, exact rational phase
// folding) and enumeration-backed inclusion certificates: every operation
// that promises a containment re-checks it before returning.
#pragma once

#include <algorithm>
#include <vector>

#include "abel/fourier.hpp"
#include "abel/group.hpp"

namespace abel {

// C0 in the measure bound mu(B(Lambda; eta)) >= (C0 eta)^|Lambda|: the arc of
// |z - 1| < eta/2 on the unit circle has normalized length at least
// eta/(4 pi) in every closed subgroup, whence the single-frequency kernel sup
// bound 1/(C0 eta) and the product bound.
inline constexpr double kBohrConstant = 1.0 / (4.0 * M_PI);

struct BohrSpec {
    GroupSpec group;
    std::vector<int64_t> freqs;  // dual element indices, sorted unique
    double radius;

    BohrSpec(GroupSpec g, std::vector<int64_t> f, double r)
        : group(std::move(g)), freqs(std::move(f)), radius(r) {
        if (!(radius > 0)) throw argument_error("Bohr radius must be positive");
        std::sort(freqs.begin(), freqs.end());
        freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());
        for (int64_t q : freqs)
            if (q < 0 || q >= group.cardinality()) throw argument_error("dual index out of range");
    }

    size_t rank() const { return freqs.size(); }

    bool contains_index(int64_t x_idx) const {
        for (int64_t q : freqs)
            if (!(group.char_dist_index(q, x_idx) < radius)) return false;
        return true;
    }
};

inline std::vector<int64_t> members(const BohrSpec& b) {
    const int64_t n = b.group.cardinality();
    std::vector<int64_t> out;
    for (int64_t x = 0; x < n; ++x)
        if (b.contains_index(x)) out.push_back(x);
    return out;
}

inline double measure(const BohrSpec& b) {
    return static_cast<double>(members(b).size()) / static_cast<double>(b.group.cardinality());
}

// Record of an enumeration-verified set inclusion.
struct InclusionCertificate {
    std::string target;       // human-readable description of the superset
    uint64_t target_hash;     // hash of the checked superset's sorted indices
    int64_t members_checked;  // number of member indices verified
    bool verified;
};

struct CertifiedBohr {
    BohrSpec spec;
    std::vector<int64_t> member_idx;  // cached members(spec)
    InclusionCertificate cert;
};

inline uint64_t hash_index_set(const GroupSpec& g, const std::vector<int64_t>& sorted_set) {
    uint64_t h = fnv1a64(g.to_string().data(), g.to_string().size());
    for (int64_t v : sorted_set) h = fnv1a64_i64(v, h);
    return h;
}

// Verifies member_idx(spec) is contained in `target` (sorted) and returns the
// certified object; throws certification_error otherwise.
inline CertifiedBohr certify_inclusion(BohrSpec spec, const std::vector<int64_t>& target_sorted,
                                       const std::string& target_desc) {
    std::vector<int64_t> mem = members(spec);
    for (int64_t m : mem) {
        if (!std::binary_search(target_sorted.begin(), target_sorted.end(), m))
            throw certification_error("Bohr inclusion certificate failed: member " +
                                      std::to_string(m) + " not in " + target_desc);
    }
    InclusionCertificate cert{target_desc, hash_index_set(spec.group, target_sorted),
                              static_cast<int64_t>(mem.size()), true};
    return CertifiedBohr{std::move(spec), std::move(mem), std::move(cert)};
}

// B(L1; e1) ^ B(L2; e2) contains B(L1 u L2; min(e1, e2)).
inline BohrSpec intersect(const BohrSpec& a, const BohrSpec& b) {
    if (a.group != b.group) throw argument_error("Bohr group mismatch");
    std::vector<int64_t> f = a.freqs;
    f.insert(f.end(), b.freqs.begin(), b.freqs.end());
    return BohrSpec(a.group, std::move(f), std::min(a.radius, b.radius));
}

// B(L; e1) + B(L; e2) is contained in B(L; e1 + e2).
inline BohrSpec sum_superset(const BohrSpec& b, double eta1, double eta2) {
    if (!(eta1 > 0) || !(eta2 > 0)) throw argument_error("radii must be positive");
    return BohrSpec(b.group, b.freqs, eta1 + eta2);
}

// phi^{-1}(B(L; eta)) = B(L o phi; eta).
inline BohrSpec preimage(const Endomorphism& phi, const BohrSpec& b) {
    if (phi.domain() != b.group) throw argument_error("Bohr/endomorphism group mismatch");
    std::vector<int64_t> f;
    f.reserve(b.freqs.size());
    for (int64_t q : b.freqs) {
        DualElement a{b.group.element_at(q).coords};
        f.push_back(b.group.index_of(Element{dual_map(phi, a).coords}));
    }
    return BohrSpec(b.group, std::move(f), b.radius);
}

namespace detail {

inline bool is_subgroup(const GroupSpec& g, const std::vector<int64_t>& h_sorted) {
    if (h_sorted.empty() || h_sorted.front() != 0) return false;
    for (int64_t a : h_sorted)
        for (int64_t b : h_sorted)
            if (!std::binary_search(h_sorted.begin(), h_sorted.end(), g.add_index(a, b)))
                return false;
    return true;
}

}  // namespace detail

// A finite-index subgroup H is the Bohr set over its annihilator characters
// with radius |e(1/m) - 1|, m = [G : H]; members reproduce H exactly.
inline BohrSpec subgroup_bohr(const GroupSpec& g, std::vector<int64_t> h) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (!detail::is_subgroup(g, h)) throw argument_error("input set is not a subgroup");
    const int64_t n = g.cardinality();
    const int64_t m = n / static_cast<int64_t>(h.size());
    if (m == 1) {
        // H = G; any single trivial constraint keeps all of G.
        return BohrSpec(g, {0}, 2.0);
    }
    std::vector<int64_t> ann;
    for (int64_t q = 0; q < n; ++q) {
        if (q == 0) continue;  // the zero character never constrains
        DualElement a{g.element_at(q).coords};
        bool kills = true;
        for (int64_t x : h) {
            if (g.pairing_phase_num(a, g.element_at(x)) != 0) {
                kills = false;
                break;
            }
        }
        if (kills) ann.push_back(q);
    }
    return BohrSpec(g, std::move(ann), GroupSpec::root_of_unity_dist(1, m));
}

namespace detail {

inline std::vector<int64_t> mask_to_set(const std::vector<uint8_t>& mask) {
    std::vector<int64_t> out;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(static_cast<int64_t>(i));
    return out;
}

inline std::vector<uint8_t> set_to_mask(int64_t n, const std::vector<int64_t>& set) {
    std::vector<uint8_t> mask(static_cast<size_t>(n), 0);
    for (int64_t i : set) mask.at(static_cast<size_t>(i)) = 1;
    return mask;
}

// {a - b : a in A, b in B} as a mask.
inline std::vector<uint8_t> difference_mask(const GroupSpec& g, const std::vector<uint8_t>& a,
                                            const std::vector<uint8_t>& b) {
    const int64_t n = g.cardinality();
    std::vector<uint8_t> out(static_cast<size_t>(n), 0);
    for (int64_t x = 0; x < n; ++x) {
        if (!a[static_cast<size_t>(x)]) continue;
        for (int64_t y = 0; y < n; ++y)
            if (b[static_cast<size_t>(y)]) out[static_cast<size_t>(g.sub_index(x, y))] = 1;
    }
    return out;
}

inline std::vector<uint8_t> sum_mask(const GroupSpec& g, const std::vector<uint8_t>& a,
                                     const std::vector<uint8_t>& b) {
    const int64_t n = g.cardinality();
    std::vector<uint8_t> out(static_cast<size_t>(n), 0);
    for (int64_t x = 0; x < n; ++x) {
        if (!a[static_cast<size_t>(x)]) continue;
        for (int64_t y = 0; y < n; ++y)
            if (b[static_cast<size_t>(y)]) out[static_cast<size_t>(g.add_index(x, y))] = 1;
    }
    return out;
}

}  // namespace detail

// A - A + A - A as a sorted index set.
inline std::vector<int64_t> double_difference_set(const GroupSpec& g,
                                                  const std::vector<int64_t>& a_set) {
    auto a = detail::set_to_mask(g.cardinality(), a_set);
    auto d = detail::difference_mask(g, a, a);
    auto s = detail::sum_mask(g, d, d);
    return detail::mask_to_set(s);
}

// Bogolyubov: a certified Bohr subset of A - A + A - A built from the large
// spectrum {gamma != 0 : |1hat_A(gamma)| >= sqrt(delta^3/2)} at radius 1.
// Rank is at most 2/delta^2 by Plancherel.
inline CertifiedBohr bogolyubov(const GroupSpec& g, const std::vector<int64_t>& a_set) {
    if (a_set.empty()) throw argument_error("Bogolyubov requires a nonempty set");
    const int64_t n = g.cardinality();
    const double delta = static_cast<double>(a_set.size()) / static_cast<double>(n);
    const double thresh = std::sqrt(delta * delta * delta / 2.0);
    Spectrum s = dft(Density::indicator(g, a_set));
    std::vector<int64_t> freqs;
    for (int64_t q = 1; q < n; ++q)
        if (std::abs(s.values[static_cast<size_t>(q)]) >= thresh) freqs.push_back(q);
    BohrSpec spec(g, std::move(freqs), 1.0);
    return certify_inclusion(std::move(spec), double_difference_set(g, a_set), "A-A+A-A");
}

// phi(B) contains a Bohr set: shrink B to quarter radius (so the shrunk set's
// double difference stays inside B), push forward, then run Bogolyubov on the
// image. Certified against phi(members(B)).
inline CertifiedBohr image_bohr(const Endomorphism& phi, const BohrSpec& b) {
    if (phi.domain() != b.group) throw argument_error("Bohr/endomorphism group mismatch");
    BohrSpec quarter(b.group, b.freqs, b.radius / 4.0);
    std::vector<int64_t> a = members(quarter);
    std::vector<int64_t> phi_a = image_of_set(phi, a);
    CertifiedBohr inner = bogolyubov(b.group, phi_a);
    std::vector<int64_t> target = image_of_set(phi, members(b));
    return certify_inclusion(inner.spec, target, "phi(B)");
}

enum class NonexistenceVerdict {
    proven_empty,  // 0 is not in the target, so no Bohr set fits inside it
    none_found,    // inconclusive; absence was not certified
};

// Every Bohr set contains 0, so 0 outside the target is the one sound
// nonexistence certificate; anything else stays "none found".
inline NonexistenceVerdict bohr_nonexistence(const std::vector<int64_t>& target_sorted) {
    return std::binary_search(target_sorted.begin(), target_sorted.end(), int64_t{0})
               ? NonexistenceVerdict::none_found
               : NonexistenceVerdict::proven_empty;
}

// Translate Bohr set: every member t keeps all the given densities' spectra
// within eta under translation by phi_i(t). The frequency set is the union of
// the large spectra pushed through the maps; rank is at most 4k/eta^2.
inline BohrSpec translate_bohr(const std::vector<Density>& fs,
                               const std::vector<Endomorphism>& phis, double eta) {
    if (fs.empty() || fs.size() != phis.size())
        throw argument_error("translate_bohr needs matching nonempty lists");
    if (!(eta > 0)) throw argument_error("eta must be positive");
    const GroupSpec& g = fs.front().group;
    std::vector<int64_t> freqs;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].group != g || phis[i].domain() != g)
            throw argument_error("translate_bohr group mismatch");
        if (sup_norm(fs[i]) > 1.0 + 1e-12)
            throw argument_error("translate_bohr requires sup-norm at most 1");
        Spectrum s = dft(fs[i]);
        for (int64_t q = 0; q < g.cardinality(); ++q) {
            if (std::abs(s.values[static_cast<size_t>(q)]) > eta / 2.0) {
                DualElement lam{g.element_at(q).coords};
                freqs.push_back(g.index_of(Element{dual_map(phis[i], lam).coords}));
            }
        }
    }
    return BohrSpec(g, std::move(freqs), eta);
}

}  // namespace abel
