#include <doctest.h>

#include <set>

#include "lwl/counting.hpp"
#include "lwl/errors.hpp"
#include "lwl/families.hpp"
#include "lwl/fragmentation.hpp"
#include "lwl/oracle.hpp"
#include "support.hpp"

using namespace lwl;

namespace {

std::uint64_t oracle_induced(const Graph& g, SmallPatternId id) {
    return oracle::count(g, find_pattern(name_of(id)), CountMode::Induced);
}

std::uint64_t exact_triangles(const Graph& g) { return count_triangles_fast(g, Exec::Serial); }

}  // namespace

TEST_CASE("small pattern metadata") {
    std::set<std::string_view> rows;
    for (auto id : all_small_patterns()) {
        CHECK(find_pattern(name_of(id)).size() == vertex_count(id));
        CHECK(small_pattern_from_name(name_of(id)) == id);
        CHECK(complement_of(complement_of(id)) == id);
        const Graph g = find_pattern(name_of(id)).graph;
        CHECK(oracle::iso(g.complement(), find_pattern(name_of(complement_of(id))).graph).isomorphic);
        rows.insert(table_row(id));
    }
    CHECK(rows.size() == kSmallPatternCount);
    CHECK(table_row(SmallPatternId::Matching2) == "G13");
    CHECK_FALSE(small_pattern_from_name("k5").has_value());
}

TEST_CASE("local statistics examples") {
    const auto k4 = local_statistics(families::complete(4), 0);
    CHECK(k4.degree == 3);
    CHECK(k4.neighborhood_edges == 3);
    CHECK(k4.neighborhood_triangles == 1);
    const auto c6 = local_statistics(families::cycle(6), 0);
    CHECK(c6.degree == 2);
    CHECK(c6.neighborhood_edges == 0);
    CHECK(c6.outer_vertices == 3);
    CHECK(c6.outer_edges == 2);
    const auto paw = local_statistics(families::paw(), 3);
    CHECK(paw.colored_triangles_122 == 1);
    CHECK(paw.colored_stars_1_22 == 1);
    CHECK_THROWS_AS(local_statistics(families::paw(), 4), InputError);
}

TEST_CASE("plans are well formed") {
    std::set<SmallPatternId> done;
    for (const auto& plan : fragmentation_plans()) {
        CHECK(plan.divisor >= 1);
        for (const auto& term : plan.terms) {
            if (term.kind == PlanTerm::Kind::Target) CHECK(done.count(term.target) == 1);
        }
        done.insert(plan.target);
    }
    CHECK(done.size() == kSmallPatternCount);
}

TEST_CASE("census examples") {
    const auto k4 = ind_count_le4(families::complete(4));
    CHECK(k4[SmallPatternId::K4] == 1);
    CHECK(k4[SmallPatternId::Triangle] == 4);
    CHECK(k4[SmallPatternId::P3] == 0);
    CHECK(k4[SmallPatternId::Edge] == 6);
    CHECK(k4[SmallPatternId::Nonedge] == 0);
    CHECK(k4.size_total(4) == 1);

    const auto c4 = ind_count_le4(families::cycle(4));
    CHECK(c4[SmallPatternId::C4] == 1);
    CHECK(c4.size_total(4) == 1);
    CHECK(c4[SmallPatternId::P3] == 4);
    CHECK(c4[SmallPatternId::Triangle] == 0);
    CHECK(c4[SmallPatternId::Edge] == 4);
    CHECK(c4[SmallPatternId::Nonedge] == 2);

    const auto c6 = ind_count_le4(families::cycle(6));
    CHECK(c6[SmallPatternId::P4] == 6);
    for (auto id : all_small_patterns()) CHECK(c6[id] == oracle_induced(families::cycle(6), id));
}

TEST_CASE("fragment counts of paw, diamond and star3") {
    CHECK(frag_count(families::paw(), SmallPatternId::Paw) == 1);
    CHECK(frag_count(families::complete(4), SmallPatternId::Paw) == 0);
    CHECK(frag_count(families::complete(4), SmallPatternId::Diamond) == 0);
    CHECK(frag_count(families::star(3), SmallPatternId::Star3) == 1);
    CHECK_THROWS_AS(frag_count(families::cycle(4), SmallPatternId::C4), InputError);
}

TEST_CASE("clique lifting") {
    CHECK(clique_lift(families::complete(5), exact_triangles) == 5);
    CHECK(clique_lift(families::complete(4), exact_triangles) == 1);
    CHECK(clique_lift(families::petersen(), exact_triangles) == 0);
    CHECK(clique_count(families::complete(7), 5, exact_triangles) == 21);
    CHECK(clique_count(families::complete(7), 6, exact_triangles) == 7);
    CHECK(clique_count(families::complete(7), 3, exact_triangles) == 35);
    CHECK_THROWS_AS(clique_count(families::complete(7), 7, exact_triangles), InputError);
    for (const auto& c : testing::random_corpus(60, 2100)) {
        CHECK(clique_lift(c.graph, exact_triangles) == oracle::count(c.graph, find_pattern("k4"), CountMode::Subgraph));
        CHECK(clique_count(c.graph, 5, exact_triangles) ==
              oracle::count(c.graph, families::complete(5), CountMode::Subgraph));
    }
}

TEST_CASE("census matches the oracle and the partition identities") {
    for (const auto& c : testing::random_corpus(200, 2200)) {
        const auto census = ind_count_le4(c.graph);
        CHECK(census.partition_identities_hold(c.graph.n()));
        for (auto id : all_small_patterns()) {
            CHECK_MESSAGE(census[id] == oracle_induced(c.graph, id), name_of(id), " seed ", c.seed);
        }
        for (auto id : {SmallPatternId::Paw, SmallPatternId::Diamond, SmallPatternId::Star3}) {
            CHECK(frag_count(c.graph, id) == census[id]);
        }
    }
}

TEST_CASE("census agrees with the golden corpus") {
    const auto golden = testing::load_golden();
    for (const auto& [file, g] : testing::load_corpus()) {
        const auto census = ind_count_le4(g);
        CHECK(census.partition_identities_hold(g.n()));
        for (auto id : all_small_patterns()) {
            CHECK_MESSAGE(census[id] == golden["graphs"][file]["induced"][std::string(name_of(id))].get<std::uint64_t>(),
                          file, " ", name_of(id));
        }
    }
}

TEST_CASE("complement duality") {
    for (const auto& c : testing::random_corpus(40, 2300)) {
        const auto census = ind_count_le4(c.graph);
        const auto dual = ind_count_le4(c.graph.complement());
        for (auto id : all_small_patterns()) CHECK(census[id] == dual[complement_of(id)]);
    }
}

TEST_CASE("larger sparse graphs keep the partition identities") {
    const auto single = oracle_induced(families::petersen(), SmallPatternId::P4);
    for (std::size_t copies : {7, 13}) {
        const Graph g = families::repeat(families::petersen(), copies);
        const auto census = ind_count_le4(g);
        CHECK(census.partition_identities_hold(g.n()));
        CHECK(census[SmallPatternId::P4] == copies * single);
    }
}

TEST_CASE("serial and parallel census agree") {
    for (const auto& c : testing::random_corpus(20, 2400)) {
        CHECK(ind_count_le4(c.graph, Exec::Serial).counts == ind_count_le4(c.graph, Exec::Parallel).counts);
    }
}
