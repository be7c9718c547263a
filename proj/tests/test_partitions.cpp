#include <doctest.h>

#include <algorithm>

#include "hlab/partition.hpp"
#include "oracles.hpp"

using namespace hlab;

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});

    const auto two_rows = enumerate_partitions(4, 2);
    CHECK(two_rows == std::vector<Partition>{Partition({4}), Partition({3, 1}),
                                             Partition({2, 2})});

    // reverse-lexicographic: (d) first, (1^d) last, parts lists descending
    for (int d = 1; d <= 8; ++d) {
        const auto all = enumerate_partitions(d);
        CHECK(all.front() == Partition({std::vector<int>(1, d)}));
        CHECK(all.back() == Partition(std::vector<int>(d, 1)));
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(all[i].parts() > all[i + 1].parts());
    }

    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0).front().empty());
    CHECK_THROWS(enumerate_partitions(-1));
}

TEST_CASE("stats on (2,1)") {
    const Partition p({2, 1});
    const auto st = stats(p);
    CHECK(st.dim_sym == 2);
    std::vector<int> cont = st.contents;
    std::sort(cont.begin(), cont.end());
    CHECK(cont == std::vector<int>{-1, 0, 1});
    CHECK(st.class_size == 3);
    CHECK(st.centralizer == 2);
}

TEST_CASE("stats invariants") {
    for (int d = 1; d <= 7; ++d) {
        Int class_total = 0, plancherel = 0;
        for (const auto& p : enumerate_partitions(d)) {
            const auto st = stats(p);
            CHECK(static_cast<int>(st.contents.size()) == d);
            CHECK(static_cast<int>(st.hooks.size()) == d);
            Int hook_prod = 1;
            for (int h : st.hooks) hook_prod *= h;
            CHECK(st.dim_sym * hook_prod == factorial(d));
            CHECK(st.class_size * st.centralizer == factorial(d));
            class_total += st.class_size;
            plancherel += st.dim_sym * st.dim_sym;

            CHECK(st.conjugate.conjugate() == p);
            auto neg = st.conjugate.contents();
            for (int& c : neg) c = -c;
            std::sort(neg.begin(), neg.end());
            auto cont = st.contents;
            std::sort(cont.begin(), cont.end());
            CHECK(neg == cont);
        }
        CHECK(class_total == factorial(d));
        CHECK(plancherel == factorial(d));
    }
}

TEST_CASE("dimension via standard Young tableaux") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& p : enumerate_partitions(d))
            CHECK(dim_sym(p) == oracle::count_syt(p));
}

TEST_CASE("dim_gl") {
    CHECK(dim_gl(Partition({2, 1}), 3) == 8);
    CHECK(dim_gl(Partition({1, 1}), 1) == 0);
    for (int d = 1; d <= 6; ++d) CHECK(dim_gl(Partition({std::vector<int>(1, d)}), 1) == 1);

    // always an integer, zero exactly when too tall
    for (int d = 1; d <= 6; ++d)
        for (const auto& p : enumerate_partitions(d))
            for (int N = 1; N <= 4; ++N) {
                const Rat v = dim_gl(p, N);
                CHECK(v.get_den() == 1);
                CHECK((v == 0) == (p.length() > N));
            }
}

TEST_CASE("Schur-Weyl dimension count") {
    for (int d = 1; d <= 8; ++d)
        for (int N = 1; N <= 4; ++N) {
            Rat total = 0;
            for (const auto& p : enumerate_partitions(d, N))
                total += Rat(dim_sym(p)) * dim_gl(p, N);
            Rat expect;
            mpz_ui_pow_ui(expect.get_num_mpz_t(), N, d);
            CHECK(total == expect);
        }
}

TEST_CASE("concat") {
    CHECK(concat(Partition({3, 1}), Partition({2})) == Partition({3, 2, 1}));
    CHECK(concat(Partition(), Partition({2, 2})) == Partition({2, 2}));
}
