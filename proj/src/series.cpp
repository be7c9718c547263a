#include "hlab/series.hpp"

#include <algorithm>

namespace hlab {

namespace {
const Rat kZero = 0;
}

LaurentGenusSeries::LaurentGenusSeries(long min_exp, std::vector<Rat> coeffs, long trunc)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)), trunc_(trunc) {
    normalize();
}

LaurentGenusSeries LaurentGenusSeries::monomial(const Rat& c, long exp, long trunc) {
    LaurentGenusSeries s;
    s.min_exp_ = exp;
    s.coeffs_ = {c};
    s.trunc_ = trunc;
    s.normalize();
    return s;
}

bool LaurentGenusSeries::is_zero() const { return coeffs_.empty(); }

void LaurentGenusSeries::normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        min_exp_ += 2 * static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) min_exp_ = 0;
}

const Rat& LaurentGenusSeries::coeff(long exp) const {
    if (exp > trunc_)
        throw TruncationError("coefficient at hbar^" + std::to_string(exp) +
                              " is beyond truncation order " + std::to_string(trunc_));
    if (coeffs_.empty() || exp < min_exp_ || ((exp - min_exp_) & 1L)) return kZero;
    const long idx = (exp - min_exp_) / 2;
    if (idx >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[idx];
}

void LaurentGenusSeries::add_coeff(long exp, const Rat& c) {
    if (exp > trunc_) throw TruncationError("add_coeff beyond truncation order");
    if (c == 0) return;
    if (coeffs_.empty()) {
        min_exp_ = exp;
        coeffs_ = {c};
        return;
    }
    if ((exp - min_exp_) & 1L)
        throw std::invalid_argument("hbar exponent parity violation");
    if (exp < min_exp_) {
        const long shift = (min_exp_ - exp) / 2;
        coeffs_.insert(coeffs_.begin(), shift, Rat(0));
        min_exp_ = exp;
    }
    const long idx = (exp - min_exp_) / 2;
    if (idx >= static_cast<long>(coeffs_.size())) coeffs_.resize(idx + 1, Rat(0));
    coeffs_[idx] += c;
    normalize();
}

void LaurentGenusSeries::set_trunc(long trunc) {
    trunc_ = trunc;
    if (!coeffs_.empty()) {
        // drop stored coefficients above the new truncation order
        while (!coeffs_.empty() && max_stored_exp() > trunc_) coeffs_.pop_back();
        normalize();
    }
}

LaurentGenusSeries& LaurentGenusSeries::operator+=(const LaurentGenusSeries& o) {
    const long trunc = std::min(trunc_, o.trunc_);
    if (!coeffs_.empty() && !o.coeffs_.empty() && ((min_exp_ - o.min_exp_) & 1L))
        throw std::invalid_argument("adding hbar series of mixed exponent parity");
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        const long exp = o.min_exp_ + 2 * static_cast<long>(i);
        if (exp > trunc) break;
        add_coeff(exp, o.coeffs_[i]);
    }
    set_trunc(trunc);
    return *this;
}

LaurentGenusSeries& LaurentGenusSeries::operator-=(const LaurentGenusSeries& o) {
    *this += -o;
    return *this;
}

LaurentGenusSeries LaurentGenusSeries::operator-() const {
    LaurentGenusSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentGenusSeries& LaurentGenusSeries::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        min_exp_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

LaurentGenusSeries operator*(const LaurentGenusSeries& a, const LaurentGenusSeries& b) {
    LaurentGenusSeries out;
    long trunc = LaurentGenusSeries::kTruncInf;
    if (a.trunc_ != LaurentGenusSeries::kTruncInf && !b.coeffs_.empty())
        trunc = std::min(trunc, a.trunc_ + b.min_exp_);
    if (b.trunc_ != LaurentGenusSeries::kTruncInf && !a.coeffs_.empty())
        trunc = std::min(trunc, b.trunc_ + a.min_exp_);
    out.trunc_ = trunc;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    out.min_exp_ = a.min_exp_ + b.min_exp_;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    // discard products above the truncation order
    while (!out.coeffs_.empty() && out.max_stored_exp() > trunc) out.coeffs_.pop_back();
    out.normalize();
    return out;
}

bool operator==(const LaurentGenusSeries& a, const LaurentGenusSeries& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_ && a.trunc_ == b.trunc_;
}

PairCoefficient PairCoefficient::one(int mode) {
    PairCoefficient p(mode);
    p.terms_[PairKey{}] = LaurentGenusSeries::one();
    return p;
}

bool PairCoefficient::is_zero() const {
    for (const auto& [k, s] : terms_)
        if (!s.is_zero()) return false;
    return true;
}

bool PairCoefficient::is_one() const {
    for (const auto& [k, s] : terms_) {
        if (k == PairKey{}) {
            if (!(s == LaurentGenusSeries::one())) return false;
        } else if (!s.is_zero()) {
            return false;
        }
    }
    return terms_.count(PairKey{}) == 1;
}

const LaurentGenusSeries& PairCoefficient::at(const PairKey& key) const {
    static const LaurentGenusSeries zero;
    auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
}

void PairCoefficient::add_term(const PairKey& key, const LaurentGenusSeries& s) {
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_.emplace(key, s);
    else
        it->second += s;
}

PairCoefficient& PairCoefficient::operator+=(const PairCoefficient& o) {
    if (mode_ != o.mode_) throw std::invalid_argument("PairCoefficient mode mismatch");
    for (const auto& [k, s] : o.terms_) add_term(k, s);
    return *this;
}

PairCoefficient& PairCoefficient::operator-=(const PairCoefficient& o) {
    *this += -o;
    return *this;
}

PairCoefficient PairCoefficient::operator-() const {
    PairCoefficient p(mode_);
    for (const auto& [k, s] : terms_) p.terms_[k] = -s;
    return p;
}

PairCoefficient& PairCoefficient::operator*=(const Rat& c) {
    for (auto& [k, s] : terms_) s *= c;
    return *this;
}

PairCoefficient operator*(const PairCoefficient& a, const PairCoefficient& b) {
    if (a.mode_ != b.mode_) throw std::invalid_argument("PairCoefficient mode mismatch");
    PairCoefficient out(a.mode_);
    for (const auto& [ka, sa] : a.terms_) {
        if (sa.is_zero() && sa.trunc() == LaurentGenusSeries::kTruncInf) continue;
        for (const auto& [kb, sb] : b.terms_) {
            PairKey key{concat(ka.alpha, kb.alpha), concat(ka.beta, kb.beta)};
            out.add_term(key, sa * sb);
        }
    }
    return out;
}

bool operator==(const PairCoefficient& a, const PairCoefficient& b) {
    if (a.mode() != b.mode()) return false;
    for (const auto& [k, s] : a.terms())
        if (!(b.at(k) == s) && !(s.is_zero() && b.at(k).is_zero())) return false;
    for (const auto& [k, s] : b.terms())
        if (a.terms().find(k) == a.terms().end() && !s.is_zero()) return false;
    return true;
}

}  // namespace hlab
