#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abel/kernel.hpp"
#include "oracles.hpp"

using namespace abel;

namespace {

// all three kernel contract properties, checked from scratch
void check_kernel_contract(const Kernel& k) {
    const GroupSpec& g = k.group();
    double mx = 0;
    for (const cplx& v : k.density.values) {
        CHECK(v.real() >= 0.0);
        CHECK(std::abs(v.imag()) < 1e-9);
        mx = std::max(mx, v.real());
    }
    CHECK(std::abs(k.density.mean() - 1.0) < 1e-9);
    auto spec = oracle::naive_dft(k.density);
    double l1 = 0;
    for (const cplx& v : spec) {
        CHECK(v.real() > -1e-12);
        l1 += std::abs(v);
    }
    CHECK(std::abs(l1 - mx) < 1e-9);       // ||Khat||_1 = ||K||_inf
    CHECK(std::abs(l1 - k.l1_spectrum) < 1e-9);
    // vanishes outside the support Bohr set
    auto mem = members(k.support_spec);
    std::vector<uint8_t> mask(static_cast<size_t>(g.cardinality()), 0);
    for (int64_t i : mem) mask[static_cast<size_t>(i)] = 1;
    for (size_t i = 0; i < k.density.values.size(); ++i)
        if (!mask[i]) CHECK(k.density.values[i].real() == 0.0);
}

}  // namespace

TEST_CASE("single frequency kernel: lambda = 0 gives the constant kernel") {
    GroupSpec g({12});
    Kernel k = single_freq_kernel(g, 0, 0.5);
    for (const cplx& v : k.density.values) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);
    check_kernel_contract(k);
}

TEST_CASE("single frequency kernel on Z8 at the order-2 character") {
    GroupSpec z8({8});
    Kernel k = single_freq_kernel(z8, 4, 0.5);
    // B({4}, 0.25) = evens; K = 2 * 1_evens by direct convolution
    for (int64_t x = 0; x < 8; ++x) {
        double expect = (x % 2 == 0) ? 2.0 : 0.0;
        CHECK(std::abs(k.density.values[static_cast<size_t>(x)].real() - expect) < 1e-9);
    }
    check_kernel_contract(k);
}

TEST_CASE("single frequency kernel sup bound 1/(C0 eta) on a prime group") {
    GroupSpec z101({101});
    for (double eta : {0.1, 0.3, 0.5}) {
        Kernel k = single_freq_kernel(z101, 1, eta);
        CHECK(sup_norm(k.density) <= 1.0 / (kBohrConstant * eta) + 1e-6);
        check_kernel_contract(k);
    }
}

TEST_CASE("bohr_kernel: empty frequency set is the constant kernel") {
    GroupSpec g({30});
    Kernel k = bohr_kernel(g, {}, 0.4);
    for (const cplx& v : k.density.values) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);
}

TEST_CASE("bohr_kernel with one frequency matches single_freq_kernel up to normalization") {
    GroupSpec z8({8});
    Kernel a = bohr_kernel(z8, {4}, 0.5);
    Kernel b = single_freq_kernel(z8, 4, 0.5);
    // single-frequency kernels already have mean 1, so they agree pointwise
    for (size_t i = 0; i < 8; ++i)
        CHECK(std::abs(a.density.values[i] - b.density.values[i]) < 1e-9);
}

TEST_CASE("bohr_kernel contract on Z60 with two frequencies") {
    GroupSpec g({60});
    Kernel k = bohr_kernel(g, {1, 7}, 0.4);
    check_kernel_contract(k);
    // supported inside B({1,7}; 0.4)
    BohrSpec support(g, {1, 7}, 0.4);
    auto mem = members(support);
    for (int64_t x = 0; x < 60; ++x) {
        if (!std::binary_search(mem.begin(), mem.end(), x))
            CHECK(k.density.values[static_cast<size_t>(x)].real() == 0.0);
    }
    CHECK(sup_norm(k.density) <= std::pow(1.0 / (kBohrConstant * 0.4), 2.0) + 1e-6);
}

TEST_CASE("bohr_kernel contract across random frequency sets") {
    SplitMix64 rng(77);
    for (auto orders : {std::vector<int64_t>{24}, {49}, {4, 9}, {2, 2, 2, 2, 2}}) {
        GroupSpec g(orders);
        for (double eta : {0.1, 0.3, 0.5}) {
            std::vector<int64_t> freqs;
            for (int j = 0; j < 3; ++j)
                freqs.push_back(static_cast<int64_t>(rng.below(static_cast<uint64_t>(g.cardinality()))));
            check_kernel_contract(bohr_kernel(g, freqs, eta));
        }
    }
}

TEST_CASE("normalization step: product spectrum at zero stays at least one") {
    // ||prod K_lambda||_1 = (prod)^hat(0) >= 1, i.e. the unnormalized product
    // has mean >= 1
    GroupSpec g({36});
    for (double eta : {0.2, 0.5}) {
        Density prod = Density::constant(g, 1.0);
        for (int64_t q : {1, 6}) {
            Kernel kq = single_freq_kernel(g, q, eta);
            for (size_t i = 0; i < prod.values.size(); ++i)
                prod.values[i] *= kq.density.values[i];
        }
        CHECK(prod.mean() >= 1.0 - 1e-9);
    }
}

TEST_CASE("uniform kernel") {
    GroupSpec g({18});
    Kernel u = Kernel::uniform(g);
    CHECK(u.l1_spectrum == doctest::Approx(1.0));
    check_kernel_contract(u);
}

TEST_CASE("kernel argument validation") {
    GroupSpec g({8});
    CHECK_THROWS_AS(single_freq_kernel(g, 1, 0.0), argument_error);
    CHECK_THROWS_AS(single_freq_kernel(g, 1, 2.5), argument_error);
    CHECK_THROWS_AS(bohr_kernel(g, {1}, -0.5), argument_error);
}
