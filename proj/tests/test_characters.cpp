#include <doctest.h>

#include "hlab/characters.hpp"
#include "oracles.hpp"

using namespace hlab;

TEST_CASE("small character values") {
    const auto t3 = character_table(3);
    CHECK(t3->chi(Partition({2, 1}), Partition({3})) == -1);
    for (const auto& alpha : t3->partitions())
        CHECK(t3->chi(Partition({3}), alpha) == 1);
    CHECK(t3->chi(Partition({1, 1, 1}), Partition({2, 1})) == -1);
}

TEST_CASE("agreement with the permutation-character oracle") {
    for (int d = 1; d <= 6; ++d) {
        const auto table = character_table(d);
        const auto brute = oracle::character_table_brute(d);
        CHECK(table->matrix() == brute);
    }
}

TEST_CASE("orthogonality") {
    for (int d = 1; d <= 7; ++d) {
        const auto table = character_table(d);
        const auto& order = table->partitions();
        const int n = static_cast<int>(order.size());
        const Int dfact = factorial(d);
        for (int l = 0; l < n; ++l)
            for (int m = l; m < n; ++m) {
                Int row = 0;
                for (int a = 0; a < n; ++a)
                    row += class_size(order[a]) * table->chi(l, a) * table->chi(m, a);
                CHECK(row == (l == m ? dfact : Int(0)));
            }
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Int col = 0;
                for (int l = 0; l < n; ++l) col += table->chi(l, a) * table->chi(l, b);
                CHECK(col == (a == b ? centralizer_order(order[a]) : Int(0)));
            }
    }
}

TEST_CASE("identity column is the dimension") {
    for (int d = 1; d <= 7; ++d) {
        const auto table = character_table(d);
        for (int l = 0; l < static_cast<int>(table->partitions().size()); ++l)
            CHECK(table->dim(l) == dim_sym(table->partitions()[l]));
    }
}

TEST_CASE("conjugate shape carries the sign twist") {
    for (int d = 2; d <= 7; ++d) {
        const auto table = character_table(d);
        for (const auto& lambda : table->partitions())
            for (const auto& alpha : table->partitions()) {
                const int sign = (d - alpha.length()) % 2 == 0 ? 1 : -1;
                CHECK(table->chi(lambda.conjugate(), alpha) ==
                      sign * table->chi(lambda, alpha));
            }
    }
}

TEST_CASE("central characters") {
    CHECK(central_character(Partition({3}), Partition({3})) == 2);
    CHECK(central_character(Partition({2, 1}), Partition({2, 1})) == 0);
    for (int d = 1; d <= 6; ++d) {
        const Partition id(std::vector<int>(d, 1));
        for (const auto& lambda : enumerate_partitions(d))
            CHECK(central_character(id, lambda) == 1);
    }
    CHECK_THROWS(central_character(Partition({2}), Partition({3})));
}

TEST_CASE("first Jucys-Murphy moment is the content sum") {
    for (int d = 2; d <= 8; ++d) {
        std::vector<int> cyc{2};
        cyc.insert(cyc.end(), d - 2, 1);
        const Partition transposition(cyc);
        for (const auto& lambda : enumerate_partitions(d)) {
            Int content_sum = 0;
            for (int c : lambda.contents()) content_sum += c;
            CHECK(central_character(transposition, lambda) == content_sum);
        }
    }
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(character_table(character_table_capacity() + 1), CapacityError);
}
