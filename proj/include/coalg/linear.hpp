// Free Z-modules on an ordered basis, plus the exact-arithmetic helpers the
// verification suites need: tensor-style pair bases, a fraction-free integer
// rank (for primitive-subspace dimensions) and truncated integer power series
// (for Hilbert-series oracles).
//
// A LinearComb<B> is a finite Z-linear combination of basis keys of type B.
// Keys only need a strict weak order via operator<.  Zero coefficients are
// never stored, so operator== is structural equality of combinations.

#pragma once

#include "coalg/ints.hpp"

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace coalg {

template <class B>
class LinearComb {
  public:
    using Terms = std::map<B, Int>;

    LinearComb() = default;

    /// The combination 1*b.
    static LinearComb basis(B b) {
        LinearComb r;
        r.terms_.emplace(std::move(b), 1);
        return r;
    }

    /// Adds c*b, erasing the term if the total coefficient becomes zero.
    void add(const B& b, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinearComb& operator+=(const LinearComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinearComb& operator-=(const LinearComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinearComb& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= k;
        return *this;
    }

    friend LinearComb operator+(LinearComb a, const LinearComb& b) { return a += b; }
    friend LinearComb operator-(LinearComb a, const LinearComb& b) { return a -= b; }
    friend LinearComb operator*(const Int& k, LinearComb a) { return a *= k; }

    bool operator==(const LinearComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinearComb& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const& { return terms_; }
    // Calling terms() on a temporary hands the map over by value so that
    // range-for over `f(x).terms()` never iterates freed storage.
    Terms terms() && { return std::move(terms_); }

    /// Coefficient of b (zero if absent).
    Int coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Linear extension of a basis-to-combination map f : B -> LinearComb<B2>.
    template <class B2, class F>
    LinearComb<B2> map_terms(F&& f) const {
        LinearComb<B2> out;
        for (const auto& [b, c] : terms_) {
            LinearComb<B2> img = f(b);
            img *= c;
            out += img;
        }
        return out;
    }

  private:
    Terms terms_;
};

/// Tensor product of two combinations as a combination on the pair basis.
template <class A, class B>
LinearComb<std::pair<A, B>> tensor(const LinearComb<A>& x, const LinearComb<B>& y) {
    LinearComb<std::pair<A, B>> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add({a, b}, ca * cb);
    return out;
}

/// Rank of an integer matrix via Bareiss fraction-free elimination.
/// Rows may have different logical meaning; the matrix is mutated in place.
inline std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Int piv = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[r][c] * piv - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

/// Dimension of the joint kernel of a basis-indexed family of functionals:
/// `reduced` sends a basis key to a combination (over any ordered key type),
/// and the result is |basis| minus the exact rank of the coefficient matrix.
/// Used for primitive-subspace dimensions with `reduced` the reduced coproduct.
template <class B, class F>
Int reduced_kernel_dim(const std::vector<B>& bas, F&& reduced) {
    using RowKey = typename std::invoke_result_t<F, const B&>::Terms::key_type;
    std::map<RowKey, std::size_t> row_of;
    std::vector<std::vector<Int>> rows;
    for (std::size_t col = 0; col < bas.size(); ++col) {
        for (const auto& [key, c] : reduced(bas[col]).terms()) {
            auto [it, fresh] = row_of.emplace(key, rows.size());
            if (fresh) rows.emplace_back(bas.size(), 0);
            rows[it->second][col] = c;
        }
    }
    return Int(bas.size()) - Int(bareiss_rank(std::move(rows)));
}

/// Truncated integer power series a_0 + a_1 x + ... + a_n x^n, exact arithmetic.
/// Used as the oracle for graded dimensions and primitive-space dimensions.
class Series {
  public:
    explicit Series(std::size_t len) : a_(len, 0) {}
    static Series x(std::size_t len) {
        Series s(len);
        if (len > 1) s.a_[1] = 1;
        return s;
    }

    std::size_t length() const { return a_.size(); }
    Int& operator[](std::size_t i) { return a_[i]; }
    const Int& operator[](std::size_t i) const { return a_[i]; }

    friend Series operator+(const Series& p, const Series& q) {
        Series r(p.length());
        for (std::size_t i = 0; i < r.length(); ++i) r.a_[i] = p.a_[i] + q.a_[i];
        return r;
    }
    friend Series operator-(const Series& p, const Series& q) {
        Series r(p.length());
        for (std::size_t i = 0; i < r.length(); ++i) r.a_[i] = p.a_[i] - q.a_[i];
        return r;
    }
    friend Series operator*(const Series& p, const Series& q) {
        Series r(p.length());
        for (std::size_t i = 0; i < r.length(); ++i)
            for (std::size_t j = 0; i + j < r.length(); ++j) r.a_[i + j] += p.a_[i] * q.a_[j];
        return r;
    }

    /// Multiplicative inverse; requires a_0 = +-1 so the result stays integral.
    Series inverse() const {
        Series r(length());
        const Int a0 = a_[0];
        r.a_[0] = a0;  // a0 is +-1, and 1/a0 == a0.
        for (std::size_t n = 1; n < length(); ++n) {
            Int s = 0;
            for (std::size_t k = 1; k <= n; ++k) s += a_[k] * r.a_[n - k];
            r.a_[n] = -s * a0;
        }
        return r;
    }

  private:
    std::vector<Int> a_;
};

}  // namespace coalg
