#include "oracles.hpp"

#include <map>
#include <stdexcept>

namespace hlab::oracle {

namespace {

// ways to distribute distinct cycles of lengths `cycles` into labeled
// rows with remaining capacities `cap`
Int distribute(const std::vector<int>& cycles, size_t i, std::vector<int>& cap,
               std::map<std::pair<size_t, std::vector<int>>, Int>& memo) {
    if (i == cycles.size()) return 1;
    const auto key = std::make_pair(i, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    for (size_t r = 0; r < cap.size(); ++r) {
        if (cap[r] < cycles[i]) continue;
        cap[r] -= cycles[i];
        total += distribute(cycles, i + 1, cap, memo);
        cap[r] += cycles[i];
    }
    memo[key] = total;
    return total;
}

Int permutation_character(const Partition& lambda, const Partition& alpha) {
    std::vector<int> cap = lambda.parts();
    std::map<std::pair<size_t, std::vector<int>>, Int> memo;
    return distribute(alpha.parts(), 0, cap, memo);
}

}  // namespace

std::vector<std::vector<Int>> character_table_brute(int d) {
    if (d < 1 || d > 6)
        throw std::invalid_argument("character_table_brute: oracle scale is d <= 6");
    const auto order = enumerate_partitions(d);
    const size_t n = order.size();
    const Int dfact = factorial(d);

    std::vector<Int> weights(n);  // |C_alpha|
    for (size_t a = 0; a < n; ++a) weights[a] = class_size(order[a]);

    std::vector<std::vector<Int>> chi;
    chi.reserve(n);
    for (size_t li = 0; li < n; ++li) {
        std::vector<Int> psi(n);
        for (size_t a = 0; a < n; ++a) psi[a] = permutation_character(order[li], order[a]);
        // subtract projections onto the irreducibles already extracted;
        // only shapes preceding lambda in canonical order can occur
        for (const auto& prev : chi) {
            Int ip = 0;
            for (size_t a = 0; a < n; ++a) ip += weights[a] * psi[a] * prev[a];
            if (ip % dfact != 0)
                throw std::logic_error("character_table_brute: non-integral multiplicity");
            const Int mult = ip / dfact;
            for (size_t a = 0; a < n; ++a) psi[a] -= mult * prev[a];
        }
        Int norm = 0;
        for (size_t a = 0; a < n; ++a) norm += weights[a] * psi[a] * psi[a];
        if (norm != dfact)
            throw std::logic_error("character_table_brute: residual is not irreducible");
        chi.push_back(std::move(psi));
    }
    return chi;
}

namespace {

Int count_syt_memo(const std::vector<int>& shape, std::map<std::vector<int>, Int>& memo) {
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    Int total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        // removable corner: strictly longer than the row below
        if (r + 1 < shape.size() && shape[r] == shape[r + 1]) continue;
        std::vector<int> next = shape;
        if (--next[r] == 0) next.pop_back();
        total += count_syt_memo(next, memo);
    }
    memo[shape] = total;
    return total;
}

void ssyt_rec(const Partition& lambda, const Spectrum& x, std::vector<std::vector<int>>& fill,
              int row, int col, Rat weight, Rat& total) {
    if (row == lambda.length()) {
        total += weight;
        return;
    }
    if (col == lambda.part(row)) {
        ssyt_rec(lambda, x, fill, row + 1, 0, weight, total);
        return;
    }
    const int n = static_cast<int>(x.size());
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);           // rows weakly increase
    if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);        // columns strictly increase
    for (int v = lo; v <= n; ++v) {
        fill[row][col] = v;
        ssyt_rec(lambda, x, fill, row, col + 1, weight * x[v - 1], total);
    }
}

}  // namespace

Int count_syt(const Partition& lambda) {
    std::map<std::vector<int>, Int> memo;
    return count_syt_memo(lambda.parts(), memo);
}

Rat schur_brute(const Partition& lambda, const Spectrum& x) {
    if (lambda.empty()) return 1;
    std::vector<std::vector<int>> fill(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) fill[r].assign(lambda.part(r), 0);
    Rat total = 0;
    ssyt_rec(lambda, x, fill, 0, 0, Rat(1), total);
    return total;
}

}  // namespace hlab::oracle
