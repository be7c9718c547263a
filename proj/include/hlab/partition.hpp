#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hlab {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a request exceeds a configured table capacity.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an evaluation hits a pole (e.g. a content equal to -N).
struct SingularEvaluation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(int n);
Int binomial(int n, int k);

/// Integer partition (Young diagram): weakly decreasing positive parts.
/// Immutable value type; the empty partition represents d = 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    /// Per-cell contents c = column - row, row-major cell order.
    std::vector<int> contents() const;
    /// Per-cell hook lengths, row-major cell order.
    std::vector<int> hooks() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionStats {
    Partition conjugate;
    std::vector<int> contents;
    std::vector<int> hooks;
    Int dim_sym;      // dim V^lambda, by the hook length formula
    Int class_size;   // |C_alpha| = d!/z_alpha
    Int centralizer;  // z_alpha = prod i^{m_i} m_i!
};

/// All partitions of d (with at most max_rows parts if max_rows >= 0),
/// in reverse-lexicographic order: (d) first, (1^d) last.
std::vector<Partition> enumerate_partitions(int d, int max_rows = -1);

PartitionStats stats(const Partition& lambda);

Int centralizer_order(const Partition& alpha);
Int class_size(const Partition& alpha);
Int dim_sym(const Partition& lambda);

/// dim W^lambda = prod (N + c) / h over cells; 0 iff length > N.
Rat dim_gl(const Partition& lambda, int N);

/// Concatenation: merge parts of a and b, re-sorted decreasingly.
Partition concat(const Partition& a, const Partition& b);

}  // namespace hlab
