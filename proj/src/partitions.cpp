#include "dsv/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dsv {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArguments("partition parts must be positive: " + join(parts_));
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw InvalidArguments("partition parts must weakly decrease: " + join(parts_));
        size_ += parts_[i];
    }
}

std::string Partition::str() const { return join(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw InvalidArguments("composition parts must be nonnegative: " + join(parts_));
        size_ += p;
    }
}

bool Composition::strong() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

std::pair<int, int> Composition::block(int i) const {
    int start = 1;
    for (int j = 1; j < i; ++j) start += parts_[j - 1];
    return {start, start + parts_[i - 1] - 1};
}

std::string Composition::str() const { return join(parts_); }

Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    if (!la.empty()) {
        cols.assign(la.part(1), 0);
        for (int p : la.parts())
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

int conjugate_part(const Partition& la, int i) {
    int count = 0;
    for (int p : la.parts())
        if (p >= i) ++count;
    return count;
}

long long n_stat(const Partition& la) {
    long long total = 0;
    for (int c : conjugate(la).parts()) total += static_cast<long long>(c) * (c - 1) / 2;
    return total;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

int coinv(const Composition& alpha) {
    int count = 0;
    int s = alpha.length();
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            if (alpha.part(i) < alpha.part(j)) ++count;
    return count;
}

Partition sort_desc(const Composition& alpha) {
    std::vector<int> parts;
    for (int p : alpha.parts())
        if (p > 0) parts.push_back(p);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

bool contains(const Composition& alpha, const Partition& la) {
    if (la.length() > alpha.length()) return false;
    for (int i = 1; i <= alpha.length(); ++i)
        if (alpha.part(i) < la.part(i)) return false;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_max_len(int n, int s) {
    std::vector<Partition> out;
    for (auto& la : partitions_of(n))
        if (la.length() <= s) out.push_back(la);
    return out;
}

std::vector<Composition> compositions(int n, int s) {
    std::vector<Composition> out;
    std::vector<int> cur(s, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == s) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        for (int p = 0; p <= remaining; ++p) {
            cur[pos] = p;
            rec(pos + 1, remaining - p);
        }
        cur[pos] = 0;
    };
    if (s == 0) {
        if (n == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(0, n);
    return out;
}

std::vector<Composition> strong_compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            rec(remaining - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> compositions_containing(int n, int s, const Partition& la) {
    std::vector<Composition> out;
    for (auto& alpha : compositions(n, s))
        if (contains(alpha, la)) out.push_back(alpha);
    return out;
}

} // namespace dsv
