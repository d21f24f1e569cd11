#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dsv/qpoly.hpp"

namespace dsv {

// Weakly decreasing sequence of positive integers; trailing zeros are
// stripped at construction so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                            // |lambda|
    int length() const { return static_cast<int>(parts_.size()); } // l(lambda)
    // 1-indexed part, 0 past the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Fixed-length sequence of nonnegative integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    int part(int i) const { return parts_[i - 1]; } // 1-indexed
    bool strong() const;

    // {block_start, block_end} of 1-based positions for the i-th block
    // (only meaningful for strong compositions).
    std::pair<int, int> block(int i) const;

    auto operator<=>(const Composition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& la);
// lambda'_i for i >= 1 without building the conjugate.
int conjugate_part(const Partition& la, int i);
// n(lambda) = sum_i C(lambda'_i, 2).
long long n_stat(const Partition& la);
// Componentwise containment (inner fits inside outer).
bool contains(const Partition& outer, const Partition& inner);
// Dominance order on partitions of equal size.
bool dominates(const Partition& a, const Partition& b);

int coinv(const Composition& alpha);
Partition sort_desc(const Composition& alpha);
bool contains(const Composition& alpha, const Partition& la);

std::vector<Partition> partitions_of(int n);
// Par(n, s): partitions of n with at most s parts.
std::vector<Partition> partitions_max_len(int n, int s);
// Comp(n, s).
std::vector<Composition> compositions(int n, int s);
std::vector<Composition> strong_compositions(int n);
// Elements of Comp(n, s) containing la componentwise.
std::vector<Composition> compositions_containing(int n, int s, const Partition& la);

} // namespace dsv
