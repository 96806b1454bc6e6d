#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "abel/regularity.hpp"
#include "abel/rules.hpp"
#include "abel/serialize.hpp"
#include "oracles.hpp"

using namespace abel;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/abel_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("density csv and binary round trips") {
    GroupSpec g({4, 9});
    Density f = oracle::random_complex_density(g, 314);

    TempFile csv("density.csv");
    write_density_csv(f, csv.path);
    Density back = read_density_csv(g, csv.path);
    for (size_t i = 0; i < f.values.size(); ++i)
        CHECK(std::abs(f.values[i] - back.values[i]) < 1e-6);  // text precision

    TempFile bin("density.bin");
    write_density_binary(f, bin.path);
    Density exact = read_density_binary(bin.path);
    CHECK(exact.group == g);
    for (size_t i = 0; i < f.values.size(); ++i)
        CHECK(f.values[i] == exact.values[i]);  // binary is lossless
}

TEST_CASE("bohr spec json carries freqs, radius, group") {
    GroupSpec g({8, 8});
    BohrSpec b(g, {3, 17}, 0.75);
    json j = to_json(b);
    CHECK(j["group"] == "Z8xZ8");
    CHECK(j["radius"] == 0.75);
    CHECK(j["freqs"].size() == 2);
    CHECK(j["freqs"][0].size() == 2);
}

TEST_CASE("kernel json carries density, support, l1 spectrum") {
    GroupSpec g({8});
    Kernel k = bohr_kernel(g, {4}, 0.5);
    json j = to_json(k);
    CHECK(j["support"]["radius"] == 0.5);
    CHECK(j["density"]["values"].size() == 8);
    CHECK(j["l1_spectrum"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("certificate json carries the target hash") {
    GroupSpec g({8});
    CertifiedBohr cb = bogolyubov(g, {0, 2, 4, 6});
    json j = to_json(cb);
    CHECK(j["certificate"]["verified"] == true);
    CHECK(j["certificate"]["target_hash"].is_number());
    CHECK(j["members"].size() == cb.member_idx.size());
}

TEST_CASE("decomposition json and trace csv") {
    GroupSpec g({16});
    TripleConfig cfg(Endomorphism::identity(g), Endomorphism::identity(g));
    Density f = Density::indicator(g, {0, 2, 4, 6, 8, 10, 12, 14});
    Decomposition d = regularity_decompose(f, cfg, 0.2, DecomposeMode::adaptive);
    json j = to_json(d);
    CHECK(j["mode"] == "adaptive");
    CHECK(j["trace"].is_array());
    CHECK(j["properties"]["er_l2"].get<double>() < 0.2);

    TempFile csv("trace.csv");
    write_trace_csv(d, csv.path);
    std::ifstream in(csv.path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,eta,kappa,lambda_size,mu_bohr,l1_kernel,smoothing_gap,step_l2");
}

TEST_CASE("set and partition rules are deterministic and valid") {
    GroupSpec g({60});
    auto a1 = parse_set_rule(g, "random:0.4:seed7");
    auto a2 = parse_set_rule(g, "random:0.4:seed7");
    CHECK(a1 == a2);
    auto a3 = parse_set_rule(g, "random:0.4:seed8");
    CHECK(a1 != a3);

    auto par = parse_partition_rule(g, "parity");
    CHECK(par.size() == 2);
    CHECK(par[0].size() + par[1].size() == 60);

    auto mod = parse_partition_rule(g, "mod:3");
    CHECK(mod.size() == 3);

    auto grouped = parse_partition_rule(g, "mod:6:0,3|1,4|2,5");
    CHECK(grouped.size() == 3);
    int64_t total = 0;
    for (const auto& c : grouped) total += static_cast<int64_t>(c.size());
    CHECK(total == 60);

    auto rnd = parse_partition_rule(g, "random:4:seed3");
    CHECK(rnd.size() <= 4);
    total = 0;
    for (const auto& c : rnd) total += static_cast<int64_t>(c.size());
    CHECK(total == 60);

    CHECK(parse_set_rule(g, "interval:0.25").size() == 15);
    CHECK_THROWS_AS(parse_set_rule(g, "nonsense"), argument_error);
    CHECK_THROWS_AS(parse_partition_rule(g, "mod:4:0,1|2"), argument_error);
}

TEST_CASE("csv set and partition rules") {
    TempFile setcsv("set.csv");
    {
        std::ofstream out(setcsv.path);
        out << "# comment\n3\n1\n4\n1\n5\n";
    }
    GroupSpec g({12});
    auto s = parse_set_rule(g, "csv:" + setcsv.path);
    CHECK(s == std::vector<int64_t>{1, 3, 4, 5});

    TempFile pcsv("part.csv");
    {
        std::ofstream out(pcsv.path);
        for (int64_t i = 0; i < 12; ++i) out << i << "," << (i % 3) << "\n";
    }
    auto p = parse_partition_rule(g, "csv:" + pcsv.path);
    CHECK(p.size() == 3);
    CHECK(p[0] == std::vector<int64_t>{0, 3, 6, 9});
}
