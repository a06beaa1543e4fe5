#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclo/combinatorics.hpp"

using namespace cyclo;

namespace {

MPartition MP(const char* s) { return parse_mpartition(s); }

// The ten-node 2-tableau used throughout: component 1 rows [1,2,4],[6,9],[7];
// component 2 rows [3,8,10],[5].
StandardMTableau example_tableau() { return parse_tableau("[[[1,2,4],[6,9],[7]],[[3,8,10],[5]]]"); }

ContentString CS(std::initializer_list<std::pair<int, int>> xs) {
    ContentString s;
    for (auto [k, z] : xs) s.entries.push_back({k, z});
    return s;
}

// Oracle: count standard fillings by trying every permutation of 1..n over the nodes.
long brute_force_tableaux(const MPartition& lam) {
    std::vector<MNode> cells = lam.nodes();
    std::vector<int> perm(cells.size());
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<MNode> nodes;
        for (int idx : perm) nodes.push_back(cells[static_cast<std::size_t>(idx)]);
        if (is_standard(lam, nodes)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool valid_mpartition(const MPartition& lam) {
    return std::all_of(lam.components.begin(), lam.components.end(), [](const Partition& p) {
        for (std::size_t i = 0; i < p.rows.size(); ++i)
            if (p.rows[i] <= 0 || (i && p.rows[i] > p.rows[i - 1])) return false;
        return true;
    });
}

// Oracle: try every node in a generous box and test validity of the modified shape directly.
std::set<std::tuple<int, int, int>> brute_boundary(const MPartition& lam, bool removable) {
    std::set<std::tuple<int, int, int>> out;
    for (int p = 1; p <= lam.m(); ++p)
        for (int r = 1; r <= lam.size() + 1; ++r)
            for (int c = 1; c <= lam.size() + 1; ++c) {
                MPartition mod = lam;
                auto& rows = mod.components[static_cast<std::size_t>(p - 1)].rows;
                bool inside = lam.contains({r, c, p});
                if (removable != inside) continue;
                if (removable) {
                    if (rows[static_cast<std::size_t>(r - 1)] != c) continue;
                    rows[static_cast<std::size_t>(r - 1)] -= 1;
                    if (rows.back() == 0) rows.pop_back();
                } else {
                    if (static_cast<int>(rows.size()) < r - 1) continue;
                    if (static_cast<int>(rows.size()) == r - 1) {
                        if (c != 1) continue;
                        rows.push_back(1);
                    } else {
                        if (rows[static_cast<std::size_t>(r - 1)] != c - 1) continue;
                        rows[static_cast<std::size_t>(r - 1)] += 1;
                    }
                }
                if (valid_mpartition(mod)) out.insert({r, c, p});
            }
    return out;
}

std::set<std::tuple<int, int, int>> as_set(const std::vector<MNode>& v) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& x : v) s.insert({x.row, x.col, x.pos});
    return s;
}

long partition_count(int n) { return static_cast<long>(enumerate_partitions(n).size()); }

}  // namespace

TEST_CASE("enumerate_mpartitions order and counts") {
    auto l = enumerate_mpartitions(2, 2);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == MP("[[2],[]]"));
    CHECK(l[1] == MP("[[1,1],[]]"));
    CHECK(l[2] == MP("[[1],[1]]"));
    CHECK(l[3] == MP("[[],[2]]"));
    CHECK(l[4] == MP("[[],[1,1]]"));
    auto e = enumerate_mpartitions(1, 0);
    REQUIRE(e.size() == 1);
    CHECK(e[0].size() == 0);
    CHECK(enumerate_mpartitions(3, 3).size() == 22);
    // Oracle: triple loop over component sizes with the independent partition numbers 1,1,2,3,5,7,11.
    const long p[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n) {
        long expect = 0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) expect += p[a] * p[b] * p[n - a - b];
        CHECK(static_cast<long>(enumerate_mpartitions(3, n).size()) == expect);
        CHECK(partition_count(n) == p[n]);
    }
}

TEST_CASE("boundary_nodes") {
    auto lam = MP("[[2],[1]]");
    CHECK(as_set(boundary_nodes(lam, BoundaryKind::Removable)) == std::set<std::tuple<int, int, int>>{{1, 2, 1}, {1, 1, 2}});
    CHECK(as_set(boundary_nodes(lam, BoundaryKind::Addable)) ==
          std::set<std::tuple<int, int, int>>{{1, 3, 1}, {2, 1, 1}, {1, 2, 2}, {2, 1, 2}});
    auto empty = MPartition::empty(3);
    CHECK(boundary_nodes(empty, BoundaryKind::Removable).empty());
    CHECK(as_set(boundary_nodes(empty, BoundaryKind::Addable)) ==
          std::set<std::tuple<int, int, int>>{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}});
    CHECK(as_set(boundary_nodes(MP("[[2,1]]"), BoundaryKind::Removable)) ==
          std::set<std::tuple<int, int, int>>{{1, 2, 1}, {2, 1, 1}});
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 5; ++n)
            for (const auto& l : enumerate_mpartitions(m, n)) {
                CHECK(as_set(boundary_nodes(l, BoundaryKind::Removable)) == brute_boundary(l, true));
                CHECK(as_set(boundary_nodes(l, BoundaryKind::Addable)) == brute_boundary(l, false));
                for (const auto& x : boundary_nodes(l, BoundaryKind::Removable)) CHECK(l.without_node(x).with_node(x) == l);
            }
}

TEST_CASE("content of nodes") {
    CHECK(content({1, 1, 1}, 2) == parse_ratfn("v1", 2));
    CHECK(content({3, 1, 1}, 2) == parse_ratfn("v1*q^-4", 2));
    CHECK(content({1, 3, 2}, 2) == parse_ratfn("v2*q^4", 2));
}

TEST_CASE("enumerate_standard_tableaux") {
    auto a = enumerate_standard_tableaux(MP("[[1],[1]]"));
    REQUIRE(a.size() == 2);
    CHECK(a[0].to_string() == "[[[1]],[[2]]]");
    CHECK(a[1].to_string() == "[[[2]],[[1]]]");
    auto b = enumerate_standard_tableaux(MP("[[2,1]]"));
    REQUIRE(b.size() == 2);
    CHECK(b[0].to_string() == "[[[1,2],[3]]]");
    CHECK(b[1].to_string() == "[[[1,3],[2]]]");
    auto c = enumerate_standard_tableaux(MP("[[1,1],[2]]"));
    REQUIRE(c.size() == 6);
    const char* expect[] = {"[[[1],[2]],[[3,4]]]", "[[[1],[3]],[[2,4]]]", "[[[1],[4]],[[2,3]]]",
                            "[[[2],[3]],[[1,4]]]", "[[[2],[4]],[[1,3]]]", "[[[3],[4]],[[1,2]]]"};
    for (int i = 0; i < 6; ++i) CHECK(c[static_cast<std::size_t>(i)].to_string() == expect[i]);
    auto d = enumerate_standard_tableaux(MP("[[2,1,1]]"));
    REQUIRE(d.size() == 3);
    CHECK(d[0].to_string() == "[[[1,2],[3],[4]]]");
    CHECK(d[1].to_string() == "[[[1,3],[2],[4]]]");
    CHECK(d[2].to_string() == "[[[1,4],[2],[3]]]");
}

TEST_CASE("dim_mpartition equals tableau counts") {
    CHECK(dim_mpartition(MP("[[1,1],[2]]")) == 6);
    CHECK(dim_mpartition(MPartition::empty(3)) == 1);
    CHECK(dim_mpartition(MP("[[2,1,1]]")) == 3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n)
            for (const auto& l : enumerate_mpartitions(m, n)) {
                auto tabs = enumerate_standard_tableaux(l);
                CHECK(dim_mpartition(l) == static_cast<long>(tabs.size()));
                for (std::size_t i = 1; i < tabs.size(); ++i) CHECK(tableau_order(tabs[i - 1], tabs[i]) < 0);
            }
    for (int m = 1; m <= 2; ++m)
        for (const auto& l : enumerate_mpartitions(m, 5)) CHECK(brute_force_tableaux(l) == dim_mpartition(l));
}

TEST_CASE("content strings") {
    auto t = example_tableau();
    auto expect = CS({{1, 0}, {1, 1}, {2, 0}, {1, 2}, {2, -1}, {1, -1}, {1, -2}, {2, 1}, {1, 0}, {2, 2}});
    CHECK(content_string(t) == expect);
    CHECK(is_content_string(expect, 2).ok);
    CHECK(string_to_tableau(expect, 2) == t);
    auto single = string_to_tableau(CS({{2, 0}}), 2);
    CHECK(single.node_of(1) == MNode{1, 1, 2});
    auto col = parse_tableau("[[[1],[2]]]");
    CHECK(content_string(col) == CS({{1, 0}, {1, -1}}));
    auto r = string_to_tableau(CS({{1, 0}, {1, -1}, {1, 1}}), 1);
    CHECK(r.to_string() == "[[[1,3],[2]]]");

    auto bad1 = is_content_string(CS({{1, 1}}), 2);
    CHECK_FALSE(bad1.ok);
    CHECK(bad1.condition == ContentStringReport::Condition::StartsAtParameter);
    CHECK(bad1.index == 1);
    auto bad3 = is_content_string(CS({{1, 0}, {1, 0}}), 2);
    CHECK_FALSE(bad3.ok);
    CHECK(bad3.condition == ContentStringReport::Condition::RepeatSeparated);
    CHECK(bad3.index == 2);
    auto bad2 = is_content_string(CS({{1, 0}, {1, 2}}), 2);
    CHECK(bad2.condition == ContentStringReport::Condition::HasNeighbour);
    CHECK_THROWS_AS(string_to_tableau(CS({{1, 0}, {1, 0}}), 2), ContentStringError);
}

TEST_CASE("round trip, distinct spectra and containment") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n) {
            std::set<ContentString> seen;
            std::size_t total = 0;
            for (const auto& l : enumerate_mpartitions(m, n))
                for (const auto& t : enumerate_standard_tableaux(l)) {
                    auto s = content_string(t);
                    CHECK(is_content_string(s, m).ok);
                    CHECK(string_to_tableau(s, m) == t);
                    for (std::size_t i = 0; i < s.entries.size(); ++i) CHECK(std::abs(s.entries[i].z) <= static_cast<int>(i));
                    seen.insert(s);
                    ++total;
                }
            CHECK(seen.size() == total);
        }
}

TEST_CASE("content strings biject with standard tableaux") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 5; ++n) {
            std::set<ContentString> image;
            for (const auto& l : enumerate_mpartitions(m, n))
                for (const auto& t : enumerate_standard_tableaux(l)) image.insert(content_string(t));
            // Every valid string has |z_i| <= i-1 because each nonzero entry needs an earlier neighbour,
            // so this box holds all candidates.
            std::set<ContentString> valid;
            ContentString cur;
            std::function<void(int)> rec = [&](int i) {
                if (i > n) {
                    if (is_content_string(cur, m).ok) valid.insert(cur);
                    return;
                }
                for (int k = 1; k <= m; ++k)
                    for (int z = -(i - 1); z <= i - 1; ++z) {
                        cur.entries.push_back({k, z});
                        rec(i + 1);
                        cur.entries.pop_back();
                    }
            };
            rec(1);
            CHECK(valid == image);
        }
}

TEST_CASE("adjacent transpositions") {
    auto row = parse_tableau("[[[1,2]]]");
    CHECK_FALSE(apply_adjacent_transposition(row, 1).has_value());
    auto t = parse_tableau("[[[1]],[[2]]]");
    auto s = apply_adjacent_transposition(t, 1);
    REQUIRE(s.has_value());
    CHECK(s->to_string() == "[[[2]],[[1]]]");
    for (const auto& l : enumerate_mpartitions(2, 4))
        for (const auto& x : enumerate_standard_tableaux(l))
            for (int i = 1; i < 4; ++i) {
                auto y = apply_adjacent_transposition(x, i);
                if (!y) continue;
                CHECK(apply_adjacent_transposition(*y, i) == x);
                auto a = content_string(x), b = content_string(*y);
                CHECK(a.entries[static_cast<std::size_t>(i - 1)] == b.entries[static_cast<std::size_t>(i)]);
                CHECK(a.entries[static_cast<std::size_t>(i)] == b.entries[static_cast<std::size_t>(i - 1)]);
            }
}

TEST_CASE("text notation") {
    CHECK(MP("[[2,1],[],[1]]").to_string() == "[[2,1],[],[1]]");
    CHECK_THROWS_AS(parse_mpartition("[[1,2]]"), ParseError);
    try {
        parse_mpartition("[[2,1],x]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK(parse_shape("[2,1]", 1) == MP("[[2,1]]"));
    CHECK_THROWS_AS(parse_shape("[[1],[1]]", 3), ParseError);
    CHECK_THROWS_AS(parse_tableau("[[[2,1]]]"), ParseError);
}
