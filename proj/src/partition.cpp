#include "wallkit/partition.hpp"

#include <algorithm>
#include <bit>

#include "wallkit/errors.hpp"

namespace wallkit {

int mask_min_element(std::uint32_t mask) { return std::countr_zero(mask) + 1; }
int mask_size(std::uint32_t mask) { return std::popcount(mask); }

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int e = 1; mask; ++e, mask >>= 1)
        if (mask & 1) out.push_back(e);
    return out;
}

bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.ground == b.ground && a.blocks == b.blocks;
}

bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.ground != b.ground) return a.ground < b.ground;
    return a.blocks < b.blocks;
}

SetPartition make_partition(int ground, std::vector<std::uint32_t> blocks) {
    if (ground < 1 || ground > 31) fail(errc::index_out_of_range, "partition ground out of range");
    const std::uint32_t full = (std::uint32_t(1) << ground) - 1;
    std::uint32_t seen = 0;
    for (auto b : blocks) {
        if (b == 0) fail(errc::empty_brick, "partition block is empty");
        if (b & ~full) fail(errc::index_out_of_range, "partition block outside ground");
        if (b & seen) fail(errc::coverage_failure, "partition blocks overlap");
        seen |= b;
    }
    if (seen != full) fail(errc::coverage_failure, "partition blocks do not cover ground");
    std::sort(blocks.begin(), blocks.end(),
              [](std::uint32_t x, std::uint32_t y) { return mask_min_element(x) < mask_min_element(y); });
    return SetPartition{ground, std::move(blocks)};
}

std::vector<SetPartition> enumerate_partitions(int n) {
    if (n < 1 || n > 16) fail(errc::budget_exceeded, "enumerate_partitions: n out of budget");
    std::vector<SetPartition> out;
    // Restricted growth strings: a[i] in [0, 1+max(a[0..i-1])].
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
        int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::uint32_t> blocks(static_cast<std::size_t>(nblocks), 0);
        for (int i = 0; i < n; ++i) blocks[a[i]] |= std::uint32_t(1) << i;
        out.push_back(SetPartition{n, std::move(blocks)});
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
            if (a[i] <= cap) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_ordered_partitions(int n, int r) {
    if (n < 1 || n > 16) fail(errc::budget_exceeded, "enumerate_ordered_partitions: n out of budget");
    if (r < 1 || r > n) return {};
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(r), 0);
    // Assign each element to one of r blocks; keep sequences whose blocks
    // are all nonempty. n <= 16 and r <= n keeps this tiny.
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int i = 0; i < n; ++i) cur[assign[i]] |= std::uint32_t(1) << i;
        if (std::none_of(cur.begin(), cur.end(), [](std::uint32_t b) { return b == 0; }))
            out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && assign[i] == r - 1) --i;
        if (i < 0) break;
        ++assign[i];
        std::fill(assign.begin() + i + 1, assign.end(), 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

long long bell_number(int n) {
    // Bell triangle.
    std::vector<std::vector<long long>> t{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> row{t.back().back()};
        for (std::size_t j = 0; j < t.back().size(); ++j) row.push_back(row.back() + t.back()[j]);
        t.push_back(std::move(row));
    }
    return t[static_cast<std::size_t>(n)][0];
}

long long stirling2(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (n == 0) return r == 0 ? 1 : 0;
    std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1),
                                          std::vector<long long>(static_cast<std::size_t>(r + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= r; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

} // namespace wallkit
