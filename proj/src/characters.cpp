#include "hlab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hlab {

CharacterTable::CharacterTable(int d, std::vector<Partition> order,
                               std::vector<std::vector<Int>> chi)
    : d_(d), order_(std::move(order)), chi_(std::move(chi)) {}

int CharacterTable::index_of(const Partition& p) const {
    // reverse-lex order is descending in the parts vector
    auto it = std::lower_bound(order_.begin(), order_.end(), p,
                               [](const Partition& a, const Partition& b) { return a > b; });
    if (it == order_.end() || !(*it == p))
        throw std::invalid_argument("partition not in table: " + p.to_string());
    return static_cast<int>(it - order_.begin());
}

namespace {

int g_capacity = 12;

// Murnaghan-Nakayama over beta-sets (first-column hook lengths).
// shape is encoded as the sorted ascending beta-set {lambda_j + (l - j)}.
struct MNKey {
    std::vector<int> beta;
    size_t cycle_idx;
    auto operator<=>(const MNKey&) const = default;
};

Int mn_rec(std::vector<int> beta, const std::vector<int>& cycles, size_t ci,
           std::map<MNKey, Int>& memo) {
    if (ci == cycles.size()) return 1;
    // strip leading "trivial" beta entries 0,1,2,... to normalize
    size_t lead = 0;
    while (lead < beta.size() && beta[lead] == static_cast<int>(lead)) ++lead;
    if (lead > 0) beta.erase(beta.begin(), beta.begin() + lead);
    for (size_t i = 0; i < beta.size(); ++i) beta[i] -= static_cast<int>(lead);

    MNKey key{beta, ci};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = cycles[ci];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        auto pos = std::lower_bound(beta.begin(), beta.end(), target);
        if (pos != beta.end() && *pos == target) continue;  // occupied
        // height-1 = number of beta entries strictly between target and beta[i]
        const int between = static_cast<int>((beta.begin() + i) - pos);
        std::vector<int> next = beta;
        next.erase(next.begin() + i);
        next.insert(std::lower_bound(next.begin(), next.end(), target), target);
        const Int sub = mn_rec(std::move(next), cycles, ci + 1, memo);
        if (between % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo[key] = total;
    return total;
}

std::vector<int> beta_set(const Partition& lambda) {
    const int l = lambda.length();
    std::vector<int> beta(l);
    for (int j = 0; j < l; ++j) beta[j] = lambda.part(j) + (l - 1 - j);
    std::sort(beta.begin(), beta.end());
    return beta;
}

std::map<int, std::shared_ptr<const CharacterTable>> g_tables;
std::function<std::shared_ptr<const CharacterTable>(int)> g_loader;
std::mutex g_mutex;

std::shared_ptr<const CharacterTable> compute_table(int d) {
    const auto order = enumerate_partitions(d);
    const int n = static_cast<int>(order.size());
    std::vector<std::vector<Int>> chi(n, std::vector<Int>(n));
    for (int li = 0; li < n; ++li) {
        const auto beta = beta_set(order[li]);
        for (int ai = 0; ai < n; ++ai) {
            std::map<MNKey, Int> memo;  // keyed by (shape, strip index), valid per alpha
            chi[li][ai] = mn_rec(beta, order[ai].parts(), 0, memo);
        }
    }
    return std::make_shared<CharacterTable>(d, order, std::move(chi));
}

}  // namespace

int character_table_capacity() { return g_capacity; }

void set_character_table_capacity(int d) {
    if (d < 1) throw std::invalid_argument("capacity must be positive");
    g_capacity = d;
}

std::shared_ptr<const CharacterTable> character_table(int d) {
    if (d < 1) throw std::invalid_argument("character_table: d must be positive");
    if (d > g_capacity)
        throw CapacityError("character table degree " + std::to_string(d) +
                            " exceeds capacity " + std::to_string(g_capacity));
    std::lock_guard<std::mutex> lock(g_mutex);
    if (auto it = g_tables.find(d); it != g_tables.end()) return it->second;
    std::shared_ptr<const CharacterTable> table;
    if (g_loader) table = g_loader(d);
    if (!table) table = compute_table(d);
    g_tables[d] = table;
    return table;
}

void set_character_table_loader(
    std::function<std::shared_ptr<const CharacterTable>(int)> loader) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_loader = std::move(loader);
    g_tables.clear();
}

Int murnaghan_nakayama(const Partition& lambda, const Partition& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("murnaghan_nakayama: size mismatch");
    std::map<MNKey, Int> memo;
    return mn_rec(beta_set(lambda), alpha.parts(), 0, memo);
}

Int central_character(const Partition& alpha, const Partition& lambda) {
    if (alpha.size() != lambda.size())
        throw std::invalid_argument("central_character: |alpha| != |lambda|");
    const int d = alpha.size();
    if (d == 0) return 1;
    const auto table = character_table(d);
    const Int num = class_size(alpha) * table->chi(lambda, alpha);
    const Int dim = table->dim(table->index_of(lambda));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), dim.get_mpz_t());
    if (r != 0)
        throw std::logic_error("central character is not integral for alpha=" +
                               alpha.to_string() + ", lambda=" + lambda.to_string());
    return q;
}

}  // namespace hlab
