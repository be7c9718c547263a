#include "hlab/partition.hpp"

#include <algorithm>
#include <numeric>

namespace hlab {

Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::vector<int> Partition::contents() const {
    std::vector<int> c;
    c.reserve(size_);
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) c.push_back(j - i);
    return c;
}

std::vector<int> Partition::hooks() const {
    std::vector<int> h;
    h.reserve(size_);
    const Partition conj = conjugate();
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j)
            h.push_back(parts_[i] - j + conj.parts_[j] - i - 1);
    return h;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left,
                   std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // need at least ceil(remaining/p) rows
        if (static_cast<long>(p) * rows_left < remaining) break;
        acc.push_back(p);
        enumerate_rec(remaining - p, p, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_rows) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be nonnegative");
    if (max_rows == 0 && d > 0) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(d, d == 0 ? 1 : d, max_rows < 0 ? d : max_rows, acc, out);
    if (d == 0) out.assign(1, Partition{});
    return out;
}

Int centralizer_order(const Partition& alpha) {
    Int z = 1;
    int mult = 0, prev = -1;
    auto flush = [&] {
        for (int i = 1; i <= mult; ++i) z *= i;  // m_i!
    };
    for (int p : alpha.parts()) {
        if (p != prev) {
            flush();
            prev = p;
            mult = 0;
        }
        ++mult;
        z *= p;
    }
    flush();
    return z;
}

Int class_size(const Partition& alpha) {
    Int cs = factorial(alpha.size());
    cs /= centralizer_order(alpha);
    return cs;
}

Int dim_sym(const Partition& lambda) {
    Int prod = 1;
    for (int h : lambda.hooks()) prod *= h;
    Int dim = factorial(lambda.size());
    dim /= prod;
    return dim;
}

PartitionStats stats(const Partition& lambda) {
    PartitionStats s;
    s.conjugate = lambda.conjugate();
    s.contents = lambda.contents();
    s.hooks = lambda.hooks();
    s.dim_sym = dim_sym(lambda);
    s.centralizer = centralizer_order(lambda);
    s.class_size = class_size(lambda);
    return s;
}

Rat dim_gl(const Partition& lambda, int N) {
    if (N < 1) throw std::invalid_argument("dim_gl: N must be positive");
    if (lambda.length() > N) return 0;
    Int num = 1, den = 1;
    const auto contents = lambda.contents();
    const auto hooks = lambda.hooks();
    for (size_t i = 0; i < contents.size(); ++i) {
        num *= N + contents[i];
        den *= hooks[i];
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace hlab
