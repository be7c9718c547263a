#pragma once

#include <vector>

#include "hlab/characters.hpp"
#include "hlab/symfunc.hpp"

namespace hlab::oracle {

/// Character table rows (canonical partition order) built independently
/// of the Murnaghan-Nakayama code path: permutation characters of the
/// Young subgroups, then Gram-Schmidt under the class inner product.
/// Oracle scale is d <= 6.
std::vector<std::vector<Int>> character_table_brute(int d);

/// Standard Young tableaux of shape lambda, counted by direct filling.
Int count_syt(const Partition& lambda);

/// Schur value by semistandard tableau enumeration (small shapes).
Rat schur_brute(const Partition& lambda, const Spectrum& x);

}  // namespace hlab::oracle
