#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "chromaprob/rational.hpp"

namespace chromaprob {

// integer partition: weakly decreasing positive parts; {} is the empty partition
using Partition = std::vector<int>;

inline bool is_valid_partition(const Partition& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0) return false;
        if (i > 0 && lambda[i] > lambda[i - 1]) return false;
    }
    return true;
}

inline int partition_weight(const Partition& lambda) {
    int w = 0;
    for (int part : lambda) w += part;
    return w;
}

inline Partition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

inline Partition conjugate_partition(const Partition& lambda) {
    Partition mu;
    if (lambda.empty()) return mu;
    mu.resize(lambda[0], 0);
    for (int part : lambda)
        for (int i = 0; i < part; ++i) mu[i]++;
    return mu;
}

// dominance order on partitions of equal weight: prefix sums of lhs all >= rhs
inline bool dominates(const Partition& lhs, const Partition& rhs) {
    long long a = 0, b = 0;
    std::size_t len = std::max(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < lhs.size() ? lhs[i] : 0;
        b += i < rhs.size() ? rhs[i] : 0;
        if (a < b) return false;
    }
    return a == b;
}

// total order used for serialization and triangular solves:
// weight first, then dominance-compatible (more dominant first), then lex
struct PartitionOrder {
    bool operator()(const Partition& lhs, const Partition& rhs) const {
        int wl = partition_weight(lhs), wr = partition_weight(rhs);
        if (wl != wr) return wl < wr;
        if (lhs == rhs) return false;
        if (dominates(lhs, rhs)) return true;
        if (dominates(rhs, lhs)) return false;
        return lhs > rhs;  // lex on incomparable pairs; larger leading part first
    }
};

inline std::vector<Partition> partitions_of(int d, int max_part, int max_parts) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if ((int)cur.size() >= max_parts) return;
        for (int part = std::min(cap, remaining); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, std::min(max_part, d));
    return out;
}

// number of distinct rearrangements of lambda padded with zeros to `slots` entries
inline Int arrangement_count(const Partition& lambda, int slots) {
    if ((int)lambda.size() > slots) return 0;
    Int count = factorial(slots);
    int run = 1;
    for (std::size_t i = 1; i <= lambda.size(); ++i) {
        if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    count /= factorial(slots - (int)lambda.size());
    return count;
}

}  // namespace chromaprob
