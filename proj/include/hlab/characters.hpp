#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hlab/partition.hpp"

namespace hlab {

/// Exact character table of S(d), rows indexed by shape lambda and
/// columns by cycle type alpha, both in reverse-lexicographic order.
class CharacterTable {
public:
    CharacterTable(int d, std::vector<Partition> order, std::vector<std::vector<Int>> chi);

    int degree() const { return d_; }
    const std::vector<Partition>& partitions() const { return order_; }
    int index_of(const Partition& p) const;

    const Int& chi(int lambda_idx, int alpha_idx) const {
        return chi_[lambda_idx][alpha_idx];
    }
    const Int& chi(const Partition& lambda, const Partition& alpha) const {
        return chi_[index_of(lambda)][index_of(alpha)];
    }
    /// dim V^lambda = chi^lambda at the identity class (1^d).
    const Int& dim(int lambda_idx) const {
        return chi_[lambda_idx][static_cast<int>(order_.size()) - 1];
    }
    const std::vector<std::vector<Int>>& matrix() const { return chi_; }

private:
    int d_;
    std::vector<Partition> order_;
    std::vector<std::vector<Int>> chi_;
};

/// Maximum degree for which tables may be built (capacity guard).
int character_table_capacity();
void set_character_table_capacity(int d);

/// Memoized table access. Computes by the Murnaghan-Nakayama rule on
/// first use; an optional loader (e.g. a disk cache) is consulted first.
std::shared_ptr<const CharacterTable> character_table(int d);

/// Install a loader tried before computing (return nullptr to fall through).
void set_character_table_loader(
    std::function<std::shared_ptr<const CharacterTable>(int)> loader);

/// Single character value by the Murnaghan-Nakayama rule (no table needed).
Int murnaghan_nakayama(const Partition& lambda, const Partition& alpha);

/// omega_alpha(lambda) = |C_alpha| chi^lambda_alpha / dim V^lambda,
/// asserted to be an integer.
Int central_character(const Partition& alpha, const Partition& lambda);

}  // namespace hlab
