#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "adjkit/errors.hpp"

namespace adjkit {

/// Binomial coefficient; 0 when k < 0 or k > n.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Strictly increasing k-tuple of 1-based indices in {1..n}.
///
/// Indices are 1-based in the public contract; ranks are 0-based and follow
/// lexicographic order on the element sequence.
class IndexSubset {
public:
    IndexSubset(int ambient, std::vector<int> elements)
        : ambient_(ambient), elements_(std::move(elements)) {
        if (ambient_ < 0) throw DomainError("IndexSubset: ambient dimension must be >= 0");
        int prev = 0;
        for (int e : elements_) {
            if (e <= prev || e > ambient_)
                throw DomainError("IndexSubset: elements must be strictly increasing in [1, n]");
            prev = e;
        }
    }

    /// {1, 2, ..., k} inside {1..n}.
    static IndexSubset first(int n, int k) {
        std::vector<int> e(static_cast<std::size_t>(std::max(k, 0)));
        std::iota(e.begin(), e.end(), 1);
        return IndexSubset(n, std::move(e));
    }

    int ambient() const { return ambient_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }

    /// 0-based access to the i-th (1-based valued) element.
    int operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }

    bool contains(int value) const {
        return std::binary_search(elements_.begin(), elements_.end(), value);
    }

    /// Complementary subset inside the same ambient set; an involution.
    IndexSubset complement() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(ambient_ - size()));
        for (int v = 1; v <= ambient_; ++v) {
            if (!contains(v)) out.push_back(v);
        }
        return IndexSubset(ambient_, std::move(out));
    }

    int element_sum() const {
        return std::accumulate(elements_.begin(), elements_.end(), 0);
    }

    /// 0-based lexicographic rank among all size()-subsets of {1..n}.
    std::int64_t rank() const {
        const int k = size();
        std::int64_t r = 0;
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            for (int v = prev + 1; v < elements_[static_cast<std::size_t>(i)]; ++v) {
                r += binomial(ambient_ - v, k - i - 1);
            }
            prev = elements_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    /// Inverse of rank(): the subset of size k at lexicographic position r.
    static IndexSubset unrank(int n, int k, std::int64_t r) {
        if (k < 0 || k > n) throw DomainError("unrank: k out of range");
        if (r < 0 || r >= binomial(n, k)) throw DomainError("unrank: rank out of range");
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(k));
        int v = 1;
        for (int i = 0; i < k; ++i) {
            while (true) {
                const std::int64_t block = binomial(n - v, k - i - 1);
                if (r < block) break;
                r -= block;
                ++v;
            }
            e.push_back(v);
            ++v;
        }
        return IndexSubset(n, std::move(e));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elements_[i]);
        }
        return s + "}";
    }

    bool operator==(const IndexSubset& o) const {
        return ambient_ == o.ambient_ && elements_ == o.elements_;
    }

private:
    int ambient_;
    std::vector<int> elements_;
};

/// All (n choose k) subsets in strict lexicographic order.
inline std::vector<IndexSubset> lex_subsets(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("lex_subsets: need 0 <= k <= n");
    std::vector<IndexSubset> out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(n, cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

inline std::int64_t subset_rank(const IndexSubset& s) { return s.rank(); }

inline IndexSubset subset_unrank(int n, int k, std::int64_t r) {
    return IndexSubset::unrank(n, k, r);
}

/// (-1)^(sum of S + sum of T); the cofactor sign of a row/column subset pair.
inline int subset_sign(const IndexSubset& s, const IndexSubset& t) {
    if (s.size() != t.size()) throw DomainError("subset_sign: subsets must have equal size");
    return ((s.element_sum() + t.element_sum()) % 2 == 0) ? 1 : -1;
}

}  // namespace adjkit
