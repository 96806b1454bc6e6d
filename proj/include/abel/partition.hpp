// Partition combinatorics: composition sets Phi_m, formal points of S_m-sets,
// monochromatic-configuration witness search with honest none-found
// semantics, the partition-to-Bohr pipeline, and Brauer-sum positivity.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abel/counting.hpp"
#include "abel/regularity.hpp"

namespace abel {

// Phi_m = { psi^{i0} o phi_1^{i1} o ... o phi_k^{ik} : 0 <= i_j <= m } u {0},
// for pairwise commuting generators. members[0] is always the zero map.
struct PhiSet {
    Endomorphism psi;
    std::vector<Endomorphism> phis;
    int degree;
    std::vector<Endomorphism> members;

    PhiSet(Endomorphism ps, std::vector<Endomorphism> ph, int m)
        : psi(std::move(ps)), phis(std::move(ph)), degree(m) {
        if (m < 0) throw argument_error("degree must be nonnegative");
        const GroupSpec& g = psi.domain();
        for (const Endomorphism& p : phis) {
            if (p.domain() != g) throw argument_error("generator domain mismatch");
            if (!commutes(psi, p)) throw argument_error("generators must commute");
        }
        for (size_t a = 0; a < phis.size(); ++a)
            for (size_t b = a + 1; b < phis.size(); ++b)
                if (!commutes(phis[a], phis[b]))
                    throw argument_error("generators must commute");

        members.push_back(Endomorphism::zero(g));
        std::vector<Endomorphism> gens;
        gens.push_back(psi);
        for (const Endomorphism& p : phis) gens.push_back(p);
        // enumerate the exponent box
        std::vector<int> exps(gens.size(), 0);
        while (true) {
            Endomorphism comp = Endomorphism::identity(g);
            for (size_t j = 0; j < gens.size(); ++j)
                for (int e = 0; e < exps[j]; ++e) comp = compose(comp, gens[j]);
            if (std::find(members.begin(), members.end(), comp) == members.end())
                members.push_back(comp);
            size_t j = 0;
            while (j < exps.size() && exps[j] == m) exps[j++] = 0;
            if (j == exps.size()) break;
            ++exps[j];
        }
    }

    const GroupSpec& group() const { return psi.domain(); }
    size_t size() const { return members.size(); }
};

// An S_m-set point: one Phi_m coefficient per generator slot.
struct FormalPoint {
    std::vector<size_t> assignment;  // indices into PhiSet::members; 0 = zero map

    std::vector<size_t> support() const {
        std::vector<size_t> s;
        for (size_t i = 0; i < assignment.size(); ++i)
            if (assignment[i] != 0) s.push_back(i);
        return s;
    }

    int64_t evaluate(const PhiSet& phi_set, const std::vector<int64_t>& concrete_idx) const {
        const GroupSpec& g = phi_set.group();
        int64_t acc = g.zero_index();
        for (size_t i = 0; i < assignment.size(); ++i) {
            if (assignment[i] == 0) continue;
            acc = g.add_index(acc, phi_set.members[assignment[i]].apply_index(concrete_idx[i]));
        }
        return acc;
    }
};

struct Witness {
    FormalPoint x;
    FormalPoint y;
    int64_t color;
    std::vector<int64_t> config;  // evaluated points: psi(y), x, x+phi_1(y), ...
    int64_t pairs_examined;
};

using Coloring = std::function<int64_t(int64_t)>;  // element index -> color

namespace detail {

inline bool disjoint_supports(const FormalPoint& a, const FormalPoint& b) {
    for (size_t i = 0; i < a.assignment.size(); ++i)
        if (a.assignment[i] != 0 && b.assignment[i] != 0) return false;
    return true;
}

inline bool advance_assignment(std::vector<size_t>& a, size_t base) {
    size_t j = 0;
    while (j < a.size() && a[j] == base - 1) a[j++] = 0;
    if (j == a.size()) return false;
    ++a[j];
    return true;
}

}  // namespace detail

// Evaluates the configuration {psi(y), x, x + phi_1(y), ..., x + phi_k(y)}.
inline std::vector<int64_t> witness_config(const PhiSet& ps, const FormalPoint& x,
                                           const FormalPoint& y,
                                           const std::vector<int64_t>& concrete_idx) {
    const GroupSpec& g = ps.group();
    int64_t xe = x.evaluate(ps, concrete_idx);
    int64_t ye = y.evaluate(ps, concrete_idx);
    std::vector<int64_t> pts;
    pts.push_back(ps.psi.apply_index(ye));
    pts.push_back(xe);
    for (const Endomorphism& p : ps.phis) pts.push_back(g.add_index(xe, p.apply_index(ye)));
    return pts;
}

// Searches (x, y) formal-point pairs with nonempty disjoint supports, in
// lexicographic order, for a configuration monochromatic under the coloring.
// Exhausting the budget (or the space) returns nullopt: a search failure,
// never a nonexistence proof.
inline std::optional<Witness> monochromatic_witness(const Coloring& coloring, const PhiSet& ps,
                                                    int n, const std::vector<Element>& concrete,
                                                    int64_t budget) {
    if (static_cast<int>(concrete.size()) != n)
        throw argument_error("concrete tuple length must equal n");
    const GroupSpec& g = ps.group();
    std::vector<int64_t> cidx;
    for (const Element& e : concrete) cidx.push_back(g.index_of(e));
    const size_t base = ps.size();
    int64_t examined = 0;

    std::vector<size_t> xa(static_cast<size_t>(n), 0);
    do {
        FormalPoint x{xa};
        if (x.support().empty()) continue;
        std::vector<size_t> ya(static_cast<size_t>(n), 0);
        do {
            FormalPoint y{ya};
            if (y.support().empty() || !detail::disjoint_supports(x, y)) continue;
            if (examined >= budget) return std::nullopt;
            ++examined;
            std::vector<int64_t> pts = witness_config(ps, x, y, cidx);
            int64_t color = coloring(pts[0]);
            bool mono = true;
            for (int64_t p : pts)
                if (coloring(p) != color) {
                    mono = false;
                    break;
                }
            if (!mono) continue;
            // re-verify before returning
            if (x.support().empty() || y.support().empty() || !detail::disjoint_supports(x, y))
                throw internal_error("witness support re-check failed");
            std::vector<int64_t> again = witness_config(ps, x, y, cidx);
            for (int64_t p : again)
                if (coloring(p) != color) throw internal_error("witness re-evaluation failed");
            return Witness{x, y, color, again, examined};
        } while (detail::advance_assignment(ya, base));
    } while (detail::advance_assignment(xa, base));
    return std::nullopt;
}

struct PartitionBohrResult {
    size_t winner;                 // chosen class index (max R_i(0), ties -> lowest)
    double r0;                     // R_winner(0)
    double threshold;              // c = r0 / 2
    CertifiedBohr bohr;            // certified subset of phi1(A_i)-phi1(A_i)+phi2(A_i)
    std::vector<int64_t> indices;  // [G:phi1], [G:psi1], [G:psi2]
};

// Partition-to-Bohr pipeline under (1) phi2 o psi2 = phi1 o psi1 and
// (2) psi1 o psi2 = psi2 o psi1. The R_i pattern places psi2 inside the
// standalone slot and psi1 inside the shifted slot, which is the orientation
// that makes phi1(x+w) + phi2(psi2(y)) - phi1(x+psi1(y)) = phi1(w).
inline PartitionBohrResult partition_bohr(const GroupSpec& g,
                                          const std::vector<std::vector<int64_t>>& partition,
                                          const Endomorphism& phi1, const Endomorphism& phi2,
                                          const Endomorphism& psi1, const Endomorphism& psi2) {
    if (!(compose(phi2, psi2) == compose(phi1, psi1)))
        throw argument_error("hypothesis failed: phi2 o psi2 != phi1 o psi1");
    if (!commutes(psi1, psi2)) throw argument_error("hypothesis failed: psi1, psi2 do not commute");
    const int64_t n = g.cardinality();
    {
        std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
        for (const auto& cls : partition)
            for (int64_t x : cls) {
                if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
                    throw argument_error("classes must be disjoint subsets of G");
                seen[static_cast<size_t>(x)] = 1;
            }
        for (int64_t x = 0; x < n; ++x)
            if (!seen[static_cast<size_t>(x)]) throw argument_error("partition does not cover G");
    }

    TripleConfig cfg(psi1, psi2);  // mixed pattern: f(x) f(x+psi1(y)) f(psi2(y))
    size_t winner = 0;
    double r0 = -1.0;
    for (size_t i = 0; i < partition.size(); ++i) {
        Density fi = Density::indicator(g, partition[i]);
        double ri = mixed_count(fi, fi, fi, cfg);
        if (ri > r0) {
            r0 = ri;
            winner = i;
        }
    }
    Density f = Density::indicator(g, partition[winner]);
    const double c = r0 / 2.0;
    const double l2 = l2_norm(f);
    const double lip = cfg.counting_constant() * l2 * l2;
    const double c_prime = c / lip;

    BohrSpec w_spec = translate_bohr({f}, {Endomorphism::identity(g)}, c_prime);
    std::vector<double> r_all = semi_shifted_count_all(f, cfg);
    for (int64_t w : members(w_spec)) {
        if (!(r_all[static_cast<size_t>(w)] > c))
            throw internal_error("partition_bohr certificate failed at w=" + std::to_string(w));
    }

    CertifiedBohr image = image_bohr(phi1, w_spec);
    // target: phi1(A_i) - phi1(A_i) + phi2(A_i)
    auto m1 = detail::set_to_mask(n, image_of_set(phi1, partition[winner]));
    auto m2 = detail::set_to_mask(n, image_of_set(phi2, partition[winner]));
    auto diff = detail::difference_mask(g, m1, m1);
    auto target = detail::mask_to_set(detail::sum_mask(g, diff, m2));
    CertifiedBohr final_bohr =
        certify_inclusion(image.spec, target, "phi1(A_i)-phi1(A_i)+phi2(A_i)");

    return PartitionBohrResult{winner, r0, c, std::move(final_bohr),
                               {image_index(phi1), image_index(psi1), image_index(psi2)}};
}

// The commuting special case psi1 = phi2, psi2 = phi1.
inline PartitionBohrResult partition_bohr(const GroupSpec& g,
                                          const std::vector<std::vector<int64_t>>& partition,
                                          const Endomorphism& phi1, const Endomorphism& phi2) {
    return partition_bohr(g, partition, phi1, phi2, phi2, phi1);
}

struct PartitionBohrBatch {
    size_t majority;               // index recurring most often over the s-list
    std::vector<size_t> per_s;     // winner for each s
    bool heuristic = true;         // diagonal pick is a finite-scale surrogate
};

// Runs partition_bohr with (id, s*id) over a list of dilation coefficients
// and reports the majority winner (ties -> lowest index).
inline PartitionBohrBatch partition_bohr_batch(const GroupSpec& g,
                                               const std::vector<std::vector<int64_t>>& partition,
                                               const std::vector<int64_t>& s_list) {
    if (s_list.empty()) throw argument_error("empty s list");
    PartitionBohrBatch out;
    std::vector<size_t> votes(partition.size(), 0);
    for (int64_t s : s_list) {
        PartitionBohrResult r =
            partition_bohr(g, partition, Endomorphism::identity(g), Endomorphism::dilation(g, s));
        out.per_s.push_back(r.winner);
        ++votes[r.winner];
    }
    out.majority = 0;
    for (size_t i = 1; i < votes.size(); ++i)
        if (votes[i] > votes[out.majority]) out.majority = i;
    return out;
}

struct BrauerReport {
    BrauerSum sum;
    bool in_hypothesis;  // commuting checked (false only when forced)
    bool positive;       // sum of T_i > 0
};

// Wraps the Brauer sum with the commuting hypothesis enforced; forcing
// non-commuting inputs is allowed for empirical runs and labels the report
// out-of-hypothesis.
inline BrauerReport brauer_positivity(const std::vector<std::vector<int64_t>>& partition,
                                      const Endomorphism& psi,
                                      const std::vector<Endomorphism>& phis,
                                      bool force_noncommuting = false) {
    BrauerSum s = brauer_sum(partition, psi, phis);
    if (!s.commuting && !force_noncommuting)
        throw argument_error("maps must commute (pass force flag for empirical runs)");
    const bool in_hyp = s.commuting;
    const bool pos = s.total > 0.0;
    return BrauerReport{std::move(s), in_hyp, pos};
}

}  // namespace abel
