#include "doctest.h"

#include "maxla/experiments.hpp"
#include "maxla/treegen.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>
#include <string>

using namespace maxla;

namespace {

const stats_record& row_for(const std::vector<stats_record>& rows, int n) {
    for (const auto& r : rows)
        if (r.n == n)
            return r;
    REQUIRE(false);
    return rows.front();
}

void check_identities(const stats_record& r) {
    CHECK(r.bip_only + r.both == r.admit_bip);
    CHECK(r.admit_bip + r.nonbip_only == r.total);
    CHECK(r.one_thistle_solved <= r.nonbip_only);
    CHECK(r.p_bip == doctest::Approx(static_cast<double>(r.admit_bip) / r.total));
}

} // namespace

TEST_CASE("maximizability counts for 7 to 9 vertices") {
    auto rows = stats_table(7, 9);
    REQUIRE(rows.size() == 3);

    struct pinned {
        int n;
        std::int64_t total, bip_only, both, admit_bip, nonbip_only, one_thistle;
    };
    const pinned expected[] = {
        {7, 11, 10, 0, 10, 1, 1},
        {8, 23, 22, 0, 22, 1, 1},
        {9, 47, 42, 1, 43, 4, 4},
    };
    for (const auto& e : expected) {
        const auto& r = row_for(rows, e.n);
        CHECK(r.total == e.total);
        CHECK(r.bip_only == e.bip_only);
        CHECK(r.both == e.both);
        CHECK(r.admit_bip == e.admit_bip);
        CHECK(r.nonbip_only == e.nonbip_only);
        CHECK(r.one_thistle_solved == e.one_thistle);
        CHECK_FALSE(r.has_ci);
        check_identities(r);
    }
}

TEST_CASE("per-tree classification agrees between sweep and search") {
    for (int n = 7; n <= 8; ++n) {
        enumerate_free_trees(n, [&](const free_tree& t) {
            auto by_sweep = classify_tree(t, 9);
            auto by_search = classify_tree(t, 0);
            CHECK(by_sweep.kind == by_search.kind);
            CHECK(by_sweep.min_thistles == by_search.min_thistles);
            CHECK(by_sweep.one_thistle_solves == by_search.one_thistle_solves);
        });
    }
}

TEST_CASE("two-linear breakdown by bridge length") {
    auto rows = two_linear_table(7, 9);

    auto find = [&](int n, int len) -> const two_linear_record& {
        for (const auto& r : rows)
            if (r.n == n && r.bridge_length == len)
                return r;
        REQUIRE(false);
        return rows.front();
    };
    auto expect = [&](int n, int len, std::int64_t bip, std::int64_t nonbip,
                      std::int64_t both) {
        const auto& r = find(n, len);
        CHECK(r.bip_only == bip);
        CHECK(r.nonbip_only == nonbip);
        CHECK(r.both == both);
    };

    expect(7, 1, 2, 0, 0);
    expect(7, 2, 0, 1, 0);
    expect(8, 1, 7, 0, 0);
    expect(8, 2, 1, 1, 0);
    expect(8, 3, 1, 0, 0);
    expect(9, 1, 14, 0, 0);
    expect(9, 2, 3, 3, 1);
    expect(9, 3, 2, 0, 0);
    expect(9, 4, 0, 1, 0);

    // Odd bridges never produce a nonbipartite-only tree.
    for (const auto& r : rows)
        if (r.bridge_length % 2 == 1)
            CHECK(r.nonbip_only == 0);
}

TEST_CASE("tie-corrected rank correlation") {
    kendall_result k = kendall_tau_b({0, 1, 2, 3}, {1, 1, 1, 0});
    REQUIRE(k.defined);
    CHECK(k.tau == doctest::Approx(-3.0 / std::sqrt(18.0)));
    CHECK(k.z == doctest::Approx(-3.0 / std::sqrt(5.0)));
    CHECK(k.p_value == doctest::Approx(0.1797).epsilon(1e-3));

    auto perfect = kendall_tau_b({1, 2, 3}, {10, 20, 30});
    REQUIRE(perfect.defined);
    CHECK(perfect.tau == doctest::Approx(1.0));

    CHECK_FALSE(kendall_tau_b({1, 1, 1}, {1, 2, 3}).defined);
    CHECK_FALSE(kendall_tau_b({1}, {2}).defined);
}

TEST_CASE("bipartite maximizability conditioned on potential thistle count") {
    auto table = thistle_conditioning(7, 9);

    auto find = [&](int n, int phi) -> const thistle_conditioning_record& {
        for (const auto& r : table.rows)
            if (r.n == n && r.phi == phi)
                return r;
        REQUIRE(false);
        return table.rows.front();
    };

    CHECK(find(7, 0).trees == 1);
    CHECK(find(7, 0).p == doctest::Approx(1.0));
    CHECK(find(7, 1).trees == 7);
    CHECK(find(7, 1).p == doctest::Approx(1.0));
    CHECK(find(7, 2).trees == 2);
    CHECK(find(7, 2).p == doctest::Approx(1.0));
    CHECK(find(7, 3).trees == 1);
    CHECK(find(7, 3).p == doctest::Approx(0.0));

    REQUIRE(table.tau_by_n.count(7) == 1);
    const auto& k7 = table.tau_by_n.at(7);
    REQUIRE(k7.defined);
    CHECK(k7.tau == doctest::Approx(-3.0 / std::sqrt(18.0)));
    CHECK(k7.p_value == doctest::Approx(0.1797).epsilon(1e-3));

    // Tie-corrected normal approximation.
    REQUIRE(table.tau_by_n.count(9) == 1);
    CHECK(table.tau_by_n.at(9).p_value == doctest::Approx(0.4795).epsilon(1e-3));

    // Per-n tree totals match the number of trees.
    std::int64_t n9 = 0;
    for (const auto& r : table.rows)
        if (r.n == 9)
            n9 += r.trees;
    CHECK(n9 == 47);
}

TEST_CASE("metric distributions") {
    SUBCASE("value gap over nonbipartite-only trees") {
        auto rows = distributions(7, 7, tree_metric::delta);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].trees == 1);
        REQUIRE(rows[0].histogram.count(1) == 1);
        CHECK(rows[0].histogram.at(1) == 1);
    }
    SUBCASE("value ratio stays below 3/2") {
        for (const auto& r : distributions(4, 9, tree_metric::ratio)) {
            CHECK(r.trees == count_free_trees(r.n));
            CHECK(r.max_ratio >= 1.0);
            CHECK(r.max_ratio <= 1.5);
        }
    }
    SUBCASE("single-thistle search closes every gap on small trees") {
        for (const auto& r : distributions(4, 10, tree_metric::multi_thistle_gap))
            CHECK(r.trees == 0);
    }
    SUBCASE("heuristic gap is small and non-negative") {
        auto rows = distributions(7, 7, tree_metric::delta_heuristic);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].trees == 1);
        for (const auto& [gap, count] : rows[0].histogram) {
            CHECK(gap >= 0);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("emitters") {
    auto rows = stats_table(7, 8);

    SUBCASE("csv") {
        auto text = emit_csv(rows);
        CHECK(text.substr(0, text.find('\n')) ==
              "n,total,bip_only,both,admit_bip,nonbip_only,one_thistle_solved,"
              "p_bip,p_one,mode");
        CHECK(text.find("7,11,10,0,10,1,1,0.9091,1.0000,exhaustive") != std::string::npos);
    }
    SUBCASE("tsv mirrors csv with tabs") {
        auto text = emit_tsv(rows);
        CHECK(text.find("7\t11\t10") != std::string::npos);
    }
    SUBCASE("json lines parse back") {
        std::istringstream in(emit_jsonl(rows));
        std::string line;
        int parsed = 0;
        while (std::getline(in, line)) {
            auto obj = nlohmann::json::parse(line);
            ++parsed;
            if (obj["n"] == 7) {
                CHECK(obj["total"] == 11);
                CHECK(obj["nonbip_only"] == 1);
                CHECK(obj["mode"] == "exhaustive");
            }
        }
        CHECK(parsed == 2);
    }
    SUBCASE("two-linear csv") {
        auto text = emit_csv(two_linear_table(7, 7));
        CHECK(text.substr(0, text.find('\n')) == "n,bridge_length,bip_only,nonbip_only,both");
        CHECK(text.find("7,2,0,1,0") != std::string::npos);
    }
    SUBCASE("conditioning csv") {
        auto text = emit_csv(thistle_conditioning(7, 7));
        CHECK(text.substr(0, text.find('\n')) == "n,phi,trees,admit_bip,p,tau,tau_p_value");
        CHECK(text.find("7,3,1,0,0.0000") != std::string::npos);
    }
}

TEST_CASE("sampled runs") {
    auto mode = run_mode::sampled(200, 5);
    auto rows = stats_table(10, 10, mode);
    REQUIRE(rows.size() == 1);
    const auto& r = rows[0];
    CHECK(r.total == 200);
    check_identities(r);
    CHECK(r.has_ci);
    CHECK(r.p_bip_ci_low >= 0.0);
    CHECK(r.p_bip_ci_low <= r.p_bip);
    CHECK(r.p_bip >= 0.0);
    CHECK(r.p_bip_ci_high >= r.p_bip);
    CHECK(r.p_bip_ci_high <= 1.0);

    // Fixed seed, fixed bytes.
    auto again = stats_table(10, 10, mode);
    CHECK(emit_csv(rows) == emit_csv(again));
    CHECK(emit_csv(rows).find("samples=200;seed=5") != std::string::npos);
    CHECK(emit_csv(rows).find("p_bip_ci_low") != std::string::npos);
}
