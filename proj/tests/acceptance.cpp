// Acceptance suite: one PASS/FAIL line per criterion, exit nonzero if any
// criterion fails. Tolerances and instance grids are pinned here, in code.
//
// The CLI binary path is injected by the build (ABEL_CLI_PATH) for the
// byte-reproducibility criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "abel/partition.hpp"
#include "abel/regularity.hpp"
#include "abel/rules.hpp"
#include "abel/serialize.hpp"
#include "abel/transfer.hpp"

using namespace abel;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Density random_complex(const GroupSpec& g, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<cplx> v(static_cast<size_t>(g.cardinality()));
    for (cplx& z : v) z = cplx(2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0);
    return Density(g, std::move(v));
}

// exact-count seeded subset of the given density
std::vector<int64_t> seeded_subset_exact(const GroupSpec& g, double density, uint64_t seed) {
    const int64_t n = g.cardinality();
    std::vector<int64_t> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    SplitMix64 rng(seed);
    int64_t want = static_cast<int64_t>(std::llround(density * static_cast<double>(n)));
    for (int64_t i = 0; i < want; ++i) {
        int64_t j = i + static_cast<int64_t>(rng.below(static_cast<uint64_t>(n - i)));
        std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
    }
    std::vector<int64_t> out(all.begin(), all.begin() + want);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const std::string name : {"Z64", "Z101", "Z2^10", "Z4xZ9"}) {
        GroupSpec g = GroupSpec::parse(name);
        Spectrum prev = dft(Density::constant(g, 1.0));
        for (int rep = 0; rep < 200 && ok; ++rep) {
            Density f = random_complex(g, 1000 * g.cardinality() + static_cast<uint64_t>(rep));
            Spectrum s = dft(f);
            // Plancherel
            double lhs = 0;
            for (const cplx& v : s.values) lhs += std::norm(v);
            double rhs = 0;
            for (const cplx& v : f.values) rhs += std::norm(v);
            rhs /= static_cast<double>(g.cardinality());
            if (std::abs(lhs - rhs) > 1e-9) {
                ok = false;
                detail = "Plancherel failed on " + name;
            }
            // Parseval against the previous density in the stream
            cplx par_lhs = 0;
            Density fprev = idft(prev);
            for (size_t i = 0; i < f.values.size(); ++i)
                par_lhs += f.values[i] * std::conj(fprev.values[i]);
            par_lhs /= static_cast<double>(g.cardinality());
            cplx par_rhs = 0;
            for (size_t i = 0; i < s.values.size(); ++i)
                par_rhs += s.values[i] * std::conj(prev.values[i]);
            if (std::abs(par_lhs - par_rhs) > 1e-9) {
                ok = false;
                detail = "Parseval failed on " + name;
            }
            prev = std::move(s);
        }
        // fast path vs the quadratic oracle
        for (int rep = 0; rep < 5 && ok; ++rep) {
            Density f = random_complex(g, 5000 * g.cardinality() + static_cast<uint64_t>(rep));
            Spectrum fast = dft(f);
            Spectrum slow = dft_direct(f);
            for (size_t i = 0; i < fast.values.size(); ++i)
                if (std::abs(fast.values[i] - slow.values[i]) > 1e-9) {
                    ok = false;
                    detail = "fast/oracle mismatch on " + name;
                    break;
                }
        }
    }
    double el = seconds_since(t0);
    if (el >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + "s";
    }
    report(1, "Fourier correctness (Parseval/Plancherel 1e-9, fast = oracle, < 60 s)", ok,
           detail.empty() ? std::to_string(el).substr(0, 5) + "s" : detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    bool ok = true;
    std::string detail;
    // 50 random (Lambda, eta) kernel-contract instances on Z_n, n <= 256
    SplitMix64 rng(20240202);
    const double etas[3] = {0.1, 0.3, 0.5};
    for (int inst = 0; inst < 50 && ok; ++inst) {
        int64_t n = 2 + static_cast<int64_t>(rng.below(255));
        GroupSpec g({n});
        double eta = etas[rng.below(3)];
        std::vector<int64_t> freqs;
        size_t rank = 1 + rng.below(3);
        for (size_t j = 0; j < rank; ++j)
            freqs.push_back(static_cast<int64_t>(rng.below(static_cast<uint64_t>(n))));
        Kernel k = bohr_kernel(g, freqs, eta);  // constructor asserts (1)-(3)
        double bound = std::pow(1.0 / (kBohrConstant * eta), static_cast<double>(k.support_spec.rank()));
        if (sup_norm(k.density) > bound * (1 + 1e-9)) {
            ok = false;
            detail = "sup bound failed at n=" + std::to_string(n);
        }
        if (std::abs(k.l1_spectrum - sup_norm(k.density)) > 1e-9) {
            ok = false;
            detail = "l1 = sup failed at n=" + std::to_string(n);
        }
    }
    // measure bound, every cyclic group n <= 512, ranks 1..3, eta grid
    for (int64_t n = 1; n <= 512 && ok; ++n) {
        GroupSpec g({n});
        SplitMix64 gr(777000 + static_cast<uint64_t>(n));
        for (double eta : {0.1, 0.3, 0.5}) {
            for (size_t rank = 1; rank <= 3; ++rank) {
                std::vector<int64_t> freqs;
                for (size_t j = 0; j < rank; ++j)
                    freqs.push_back(static_cast<int64_t>(gr.below(static_cast<uint64_t>(n))));
                BohrSpec b(g, freqs, eta);
                double bound = std::pow(kBohrConstant * eta, static_cast<double>(b.rank()));
                if (measure(b) < bound - 1e-12) {
                    ok = false;
                    detail = "measure bound failed at n=" + std::to_string(n);
                    break;
                }
            }
            if (!ok) break;
        }
    }
    report(2, "kernel contract (50 instances) and measure bound (all Z_n, n <= 512)", ok, detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    bool ok = true;
    std::string detail;
    const std::vector<int64_t> sizes{30, 60, 64, 90, 101, 120, 125, 128, 150, 180, 210, 243, 256};
    SplitMix64 rng(33003300);
    int done = 0;
    while (done < 500 && ok) {
        int64_t n = sizes[rng.below(sizes.size())];
        GroupSpec g({n});
        // dilation with image index in {1,2,3,5}
        auto pick = [&]() {
            while (true) {
                int64_t c = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(n - 1)));
                int64_t gcd = std::gcd(c, n);
                if (gcd == 1 || gcd == 2 || gcd == 3 || gcd == 5) return c;
            }
        };
        TripleConfig cfg(Endomorphism::dilation(g, pick()), Endomorphism::dilation(g, pick()));
        auto mk = [&](uint64_t s) {
            SplitMix64 r2(s);
            std::vector<double> v(static_cast<size_t>(n));
            for (double& x : v) x = r2.unit();
            return Density::unit(g, v);
        };
        Density f1 = mk(rng.next()), f2 = mk(rng.next()), f3 = mk(rng.next());
        std::optional<Kernel> k;
        if (rng.below(2) == 0)
            k = bohr_kernel(g, {static_cast<int64_t>(rng.below(static_cast<uint64_t>(n)))}, 0.3);
        BoundVariant variant = rng.below(2) == 0 ? BoundVariant::shifted : BoundVariant::fiber;
        BoundReport r = counting_bound_check(f1, f2, f3, k, cfg, variant);
        if (!r.passes) {
            ok = false;
            detail = "bound failed at n=" + std::to_string(n) + " lhs=" + std::to_string(r.lhs) +
                     " rhs=" + std::to_string(r.rhs);
        }
        ++done;
    }
    // the degenerate construction violates the index-free version
    if (ok) {
        GroupSpec g({2, 2, 2, 2});
        TripleConfig cfg(Endomorphism::identity(g), Endomorphism::dilation(g, 2));
        std::vector<cplx> pv(16, cplx(0, 0));
        pv[0] = cplx(16, 0);
        Density point(g, pv);
        Density one = Density::constant(g, 1.0);
        BoundReport r =
            counting_bound_check(point, one, point, std::nullopt, cfg, BoundVariant::shifted);
        if (r.passes_unit || !r.passes) {
            ok = false;
            detail = "degenerate construction not reported as an index-free violation";
        }
    }
    report(3, "counting-lemma bound on 500 instances + degenerate violation", ok, detail);
}

// grid shared by criteria 4 and 5
struct GridInstance {
    std::string group;
    std::string family;
    double delta;
    std::vector<int64_t> set;
};

std::vector<GridInstance> acceptance_grid() {
    std::vector<GridInstance> out;
    uint64_t seed = 440044;
    for (const std::string name : {"Z64", "Z101", "Z2^8"}) {
        GroupSpec g = GroupSpec::parse(name);
        const int64_t n = g.cardinality();
        for (double delta : {0.3, 0.5, 0.7}) {
            out.push_back({name, "random", delta, seeded_subset_exact(g, delta, seed++)});
            std::vector<int64_t> interval;
            for (int64_t i = 0; i < static_cast<int64_t>(delta * static_cast<double>(n)); ++i)
                interval.push_back(i);
            out.push_back({name, "interval", delta, interval});
        }
        // subgroup indicator where an index-2 subgroup exists
        if (name == "Z64") {
            std::vector<int64_t> evens;
            for (int64_t i = 0; i < 64; i += 2) evens.push_back(i);
            out.push_back({name, "subgroup", 0.5, evens});
        } else if (name == "Z2^8") {
            std::vector<int64_t> hyper;
            for (int64_t i = 0; i < 256; ++i)
                if (g.element_at(i).coords[0] == 0) hyper.push_back(i);
            out.push_back({name, "subgroup", 0.5, hyper});
        }
    }
    return out;
}

TripleConfig grid_config(const GroupSpec& g, const std::string& name) {
    if (name == "Z2^8") {
        // identity and the cyclic coordinate shift: indices 1, 1, 2
        size_t k = g.rank();
        std::vector<int64_t> s(k * k, 0);
        for (size_t i = 0; i < k; ++i) s[i * k + (i + 1) % k] = 1;
        return TripleConfig(Endomorphism::identity(g), Endomorphism(g, std::move(s)));
    }
    return TripleConfig(Endomorphism::identity(g), Endomorphism::dilation(g, 2));
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    bool ok = true;
    std::string detail;
    double worst = 0;
    int count = 0;
    for (const GridInstance& inst : acceptance_grid()) {
        GroupSpec g = GroupSpec::parse(inst.group);
        TripleConfig cfg = grid_config(g, inst.group);
        Density f = Density::indicator(g, inst.set);
        for (double eps : {0.1, 0.2}) {
            for (DecomposeMode mode : {DecomposeMode::faithful, DecomposeMode::adaptive}) {
                auto t0 = Clock::now();
                try {
                    Decomposition d = regularity_decompose(f, cfg, eps, mode);
                    int m = static_cast<int>(std::ceil(2.0 / (eps * eps)));
                    if (d.stop_index >= m) {
                        ok = false;
                        detail = "stop index out of budget on " + inst.group;
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = inst.group + "/" + inst.family + ": " + e.what();
                }
                double el = seconds_since(t0);
                worst = std::max(worst, el);
                if (el >= 10.0) {
                    ok = false;
                    detail = "instance runtime " + std::to_string(el) + "s";
                }
                ++count;
            }
        }
    }
    report(4, "regularity decomposition grid (" + std::to_string(count) + " instances)", ok,
           ok ? "worst instance " + std::to_string(worst).substr(0, 5) + "s" : detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    bool ok = true;
    std::string detail;
    for (const GridInstance& inst : acceptance_grid()) {
        GroupSpec g = GroupSpec::parse(inst.group);
        TripleConfig cfg = grid_config(g, inst.group);
        Density f = Density::indicator(g, inst.set);
        KhintchineResult r = khintchine_set(f, cfg, 0.1);
        if (!(r.measure > 0.0) || !(r.j_value > 0.0)) {
            ok = false;
            detail = "positivity failed on " + inst.group + "/" + inst.family;
        }
    }
    // exact subgroup instance
    GroupSpec g12({12});
    TripleConfig cfg12(Endomorphism::identity(g12), Endomorphism::identity(g12));
    Density h = Density::indicator(g12, {0, 2, 4, 6, 8, 10});
    KhintchineResult r = khintchine_set(h, cfg12, 0.01);
    if (r.level_set != std::vector<int64_t>{0, 2, 4, 6, 8, 10} || r.measure != 0.5) {
        ok = false;
        detail = "subgroup instance not exact";
    }
    report(5, "Khintchine positivity on the grid; exact subgroup level set", ok, detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    bool ok = true;
    std::string detail;
    int certified = 0;
    for (const std::string name : {"Z25", "Z49", "Z101"}) {
        GroupSpec g = GroupSpec::parse(name);
        for (auto maps : {std::array<int64_t, 3>{1, 1, -2}, {1, 2, -3}}) {
            for (int rep = 0; rep < 50 && ok; ++rep) {
                uint64_t seed = 660066 + static_cast<uint64_t>(rep) * 13 +
                                static_cast<uint64_t>(g.cardinality());
                auto a = seeded_subset_exact(g, 0.4, seed);
                try {
                    SumsetBohrResult r = sumset_bohr_density(
                        g, a, Endomorphism::dilation(g, maps[0]),
                        Endomorphism::dilation(g, maps[1]), Endomorphism::dilation(g, maps[2]));
                    if (!r.bohr.cert.verified) {
                        ok = false;
                        detail = "unverified certificate on " + name;
                    }
                    ++certified;
                } catch (const std::exception& e) {
                    ok = false;
                    detail = name + ": " + e.what();
                }
            }
        }
    }
    // necessity: A + A + A misses 0 for an initial segment
    if (ok) {
        GroupSpec g({101});
        std::set<int64_t> a;
        for (int64_t i = 1; i <= 10; ++i) a.insert(i);
        std::set<int64_t> s;
        for (int64_t x : a)
            for (int64_t y : a)
                for (int64_t z : a) s.insert((x + y + z) % 101);
        if (s.count(0)) {
            ok = false;
            detail = "A+A+A unexpectedly contains 0";
        }
    }
    // necessity: A + A - A stays odd for the odd residues of Z_2N
    if (ok) {
        GroupSpec g({24});
        std::set<int64_t> odd;
        for (int64_t i = 1; i < 24; i += 2) odd.insert(i);
        std::set<int64_t> s;
        for (int64_t x : odd)
            for (int64_t y : odd)
                for (int64_t z : odd) s.insert(((x + y - z) % 24 + 24) % 24);
        if (s.count(0)) {
            ok = false;
            detail = "A+A-A unexpectedly contains 0";
        }
    }
    report(6, "certified sumset Bohr sets (" + std::to_string(certified) +
                  " runs, zero failures) + necessity reproductions",
           ok, detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    bool ok = true;
    std::string detail;
    for (const std::string name : {"Z12", "Z24", "Z36"}) {
        GroupSpec g = GroupSpec::parse(name);
        for (const std::string rule : {"parity", "mod:3"}) {
            auto classes = parse_partition_rule(g, rule);
            for (int64_t c2 : {1, 2}) {
                try {
                    PartitionBohrResult r = partition_bohr(g, classes, Endomorphism::identity(g),
                                                           Endomorphism::dilation(g, c2));
                    if (!r.bohr.cert.verified) {
                        ok = false;
                        detail = "unverified partition certificate on " + name;
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = name + "/" + rule + ": " + e.what();
                }
            }
        }
    }
    // Brauer positivity across 100 random partitions of Z64
    GroupSpec g64({64});
    Endomorphism psi = Endomorphism::identity(g64);
    std::vector<Endomorphism> phis{Endomorphism::dilation(g64, 3), Endomorphism::dilation(g64, 5)};
    for (uint64_t seed = 0; seed < 100 && ok; ++seed) {
        SplitMix64 rng(770077 + seed);
        size_t r_classes = 2 + rng.below(3);  // r <= 4
        std::vector<std::vector<int64_t>> classes(r_classes);
        for (int64_t x = 0; x < 64; ++x)
            classes[static_cast<size_t>(rng.below(r_classes))].push_back(x);
        std::vector<std::vector<int64_t>> nonempty;
        for (auto& c : classes)
            if (!c.empty()) nonempty.push_back(std::move(c));
        BrauerReport rep = brauer_positivity(nonempty, psi, phis);
        if (!(rep.sum.total > 0.0)) {
            ok = false;
            detail = "Brauer sum not strictly positive at seed " + std::to_string(seed);
        }
    }
    report(7, "partition pipeline certificates + Brauer positivity (100 partitions)", ok, detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    bool ok = true;
    std::string detail;
    // parity-colored Z16
    {
        GroupSpec g({16});
        Endomorphism id = Endomorphism::identity(g);
        PhiSet ps(id, {id}, 1);
        Coloring parity = [](int64_t idx) { return idx % 2; };
        auto w = monochromatic_witness(parity, ps, 2, {Element{{2}}, Element{{4}}}, 100000);
        if (!w) {
            ok = false;
            detail = "no witness on parity-colored Z16";
        } else {
            int64_t color = w->config[0] % 2;
            for (int64_t p : w->config)
                if (p % 2 != color) ok = false;
            auto sx = w->x.support(), sy = w->y.support();
            if (sx.empty() || sy.empty()) ok = false;
            for (size_t i : sx)
                if (std::find(sy.begin(), sy.end(), i) != sy.end()) ok = false;
            if (!ok) detail = "witness failed re-verification";
        }
    }
    // constant colorings across groups and generator counts
    for (const std::string name : {"Z16", "Z9", "Z2^3", "Z5xZ5"}) {
        GroupSpec g = GroupSpec::parse(name);
        Endomorphism id = Endomorphism::identity(g);
        for (int k = 1; k <= 2 && ok; ++k) {
            std::vector<Endomorphism> phis(static_cast<size_t>(k), id);
            PhiSet ps(id, phis, 1);
            Coloring mono = [](int64_t) { return 0; };
            auto w = monochromatic_witness(mono, ps, 2, {g.element_at(1), g.element_at(0)}, 10000);
            if (!w) {
                ok = false;
                detail = "constant coloring failed on " + name;
            } else {
                auto sx = w->x.support(), sy = w->y.support();
                if (sx.empty() || sy.empty()) {
                    ok = false;
                    detail = "support check failed on " + name;
                }
                for (size_t i : sx)
                    if (std::find(sy.begin(), sy.end(), i) != sy.end()) {
                        ok = false;
                        detail = "supports overlap on " + name;
                    }
            }
        }
    }
    report(8, "monochromatic witness search (parity Z16, constant colorings)", ok, detail);
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
    bool ok = true;
    std::string detail;
    // interval lifting, exhaustive
    for (auto [s1, s2] : {std::pair<int64_t, int64_t>{1, 1}, {2, 1}, {1, 3}}) {
        for (int64_t n = 1; n <= 8 && ok; ++n) {
            if (!lifting_exhaustive_check(n, s1, s2, interval_embed_modulus(n, s1, s2))) {
                ok = false;
                detail = "lifting failed at N=" + std::to_string(n);
            }
        }
    }
    // interval pattern counts: positive and stable at c * N^2 across the ladder
    if (ok) {
        for (const std::string rule : {"parity", "mod:3"}) {
            for (int64_t k = 1; k <= 2; ++k) {
                for (int64_t l = 1; l <= 3; ++l) {
                    double cmin = 1e18;
                    for (int64_t n : {40, 60, 80}) {
                        auto classes = parse_interval_partition(n, rule);
                        IntervalCount c = brauer_interval_count(classes, n, k, l);
                        double norm = static_cast<double>(c.count) /
                                      (static_cast<double>(n) * static_cast<double>(n));
                        cmin = std::min(cmin, norm);
                    }
                    if (!(cmin > 0.0)) {
                        ok = false;
                        detail = "interval count not positive for " + rule;
                    }
                    // recorded c: every ladder count is >= cmin * N^2 by construction;
                    // assert the recorded constant is meaningfully positive
                    if (cmin < 1e-6) {
                        ok = false;
                        detail = "recorded c too small for " + rule;
                    }
                }
            }
        }
    }
    // Gaussian certificates at N' <= 127
    if (ok) {
        for (auto triple :
             {std::array<GaussianInt, 3>{GaussianInt{1, 0}, GaussianInt{1, 0}, GaussianInt{-2, 0}},
              {GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, -1}}}) {
            SplitMix64 rng(990099);
            std::vector<GaussianInt> mem;
            for (int64_t re = -8; re <= 8; ++re)
                for (int64_t im = -8; im <= 8; ++im)
                    if (rng.unit() < 0.5) mem.push_back({re, im});
            GaussianGrid grid(8, mem);
            try {
                GaussianSumsetResult r = gaussian_sumset_bohr(grid, triple[0], triple[1], triple[2]);
                if (r.n_prime > 127 || !r.inner.bohr.cert.verified || !r.integer_cert.verified) {
                    ok = false;
                    detail = "Gaussian certificate failed";
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = std::string("Gaussian: ") + e.what();
            }
        }
    }
    // F_p quotient certificates at p^N <= 4096
    if (ok) {
        try {
            GroupSpec g5 = PolyQuotient::make_group(2, 5);
            auto a = seeded_subset_exact(g5, 0.5, 42);
            SubspaceResult r = polyquot_sumset_subspace(2, 5, a, {1}, {0, 1}, {1, 1});
            if (!r.cert.verified || r.quotient.group.cardinality() > 4096) ok = false;
            GroupSpec g3 = PolyQuotient::make_group(3, 3);
            auto b = seeded_subset_exact(g3, 0.5, 43);
            SubspaceResult r3 = polyquot_sumset_subspace(3, 3, b, {1}, {1}, {1});
            if (!r3.cert.verified || r3.quotient.group.cardinality() > 4096) ok = false;
            if (!ok) detail = "polynomial quotient certificate failed";
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("polyquot: ") + e.what();
        }
    }
    report(9, "transfer: exhaustive lifting, interval counts, ring certificates", ok, detail);
}

// --------------------------------------------------------------- criterion 10
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion10() {
#ifndef ABEL_CLI_PATH
    report(10, "CLI byte-reproducibility", false, "CLI path not wired into the build");
#else
    bool ok = true;
    std::string detail;
    const std::string cli = ABEL_CLI_PATH;
    struct Run {
        std::string name;
        std::string args;
    };
    const std::vector<Run> runs{
        {"find-bohr", "find-bohr --group Z101 --set random:0.4:seed7 --maps 1,1,-2"},
        {"decompose", "decompose --group Z64 --set random:0.5:seed3 --maps id,2 --epsilon 0.1"},
        {"partition-bohr", "partition-bohr --group Z12 --partition parity --maps id,id"},
        {"transfer", "transfer --kind gaussian --N 4 --s1 1,0 --s2 0,1 --s3 -1,-1 --seed 5"},
    };
    for (const Run& r : runs) {
        std::string p1 = "/tmp/abel_accept_a.json", p2 = "/tmp/abel_accept_b.json";
        std::string cmd1 = cli + " " + r.args + " --out " + p1 + " >/dev/null 2>&1";
        std::string cmd2 = cli + " " + r.args + " --out " + p2 + " >/dev/null 2>&1";
        if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
            ok = false;
            detail = r.name + " exited nonzero";
            break;
        }
        std::string a = slurp(p1), b = slurp(p2);
        if (a.empty() || a != b) {
            ok = false;
            detail = r.name + " reports differ";
            break;
        }
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }
    // usage errors exit with code 1 (distinct from certification failures)
    if (ok) {
        std::string bad = cli + " find-bohr --group Z101 --set random:0.4:seed7 --maps 1,1,1" +
                          " >/dev/null 2>&1";
        int rc = std::system(bad.c_str());
        if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 1) {
            ok = false;
            detail = "argument error did not exit 1";
        }
    }
    report(10, "CLI byte-reproducibility across repeated seeded runs", ok, detail);
#endif
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%d criteria failed; total %.1fs\n", g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
