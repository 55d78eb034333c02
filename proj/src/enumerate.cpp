#include "bpart/enumerate.hpp"

#include <algorithm>

namespace bpart {

namespace {

// Parts are chosen largest-first, scanning candidates in descending
// order, which emits partitions directly in canonical order.
void gen_by_sum(int remaining, int cap, bool prev_odd, bool smallest_even,
                std::vector<int>& acc, std::vector<Partition>& out) {
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        if (prev_odd && part % 2 == 1) continue;
        if (part == remaining) {
            if (!smallest_even || part % 2 == 0) {
                acc.push_back(part);
                out.push_back(Partition(acc));
                acc.pop_back();
            }
        } else {
            acc.push_back(part);
            gen_by_sum(remaining - part, part - 1, part % 2 == 1, smallest_even, acc, out);
            acc.pop_back();
        }
    }
}

// Chains whose adjacent differences are 1 or 2 and whose final part lands
// in [min_last, max_last]; used for irreducible and reduced shapes.
void gen_chain(std::vector<int>& acc, int more, int min_last, int max_last,
               std::vector<Partition>& out) {
    const int cur = acc.back();
    if (more == 0) {
        if (cur >= min_last && cur <= max_last) out.push_back(Partition(acc));
        return;
    }
    for (int next : {cur - 1, cur - 2}) {
        if (next < 1) continue;
        if (cur % 2 == 1 && next % 2 == 1) continue;
        // reachable final range after the remaining steps is
        // [next - 2*(more-1), next - (more-1)]
        if (next - 2 * (more - 1) > max_last) continue;
        if (next - (more - 1) < min_last) continue;
        acc.push_back(next);
        gen_chain(acc, more - 1, min_last, max_last, out);
        acc.pop_back();
    }
}

void gen_shape(std::vector<int>& acc, int more, std::vector<Partition>& out) {
    const int cur = acc.back();
    if (more == 0) {
        if (cur % 2 == 0) out.push_back(Partition(acc));
        return;
    }
    for (int next = cur - 1; next >= more; --next) {
        if (cur % 2 == 1 && next % 2 == 1) continue;
        acc.push_back(next);
        gen_shape(acc, more - 1, out);
        acc.pop_back();
    }
}

// Any length; extensions are emitted before the bare prefix so that the
// output stays lexicographically descending.
void gen_with_largest(std::vector<int>& acc, bool smallest_even, std::vector<Partition>& out) {
    const int cur = acc.back();
    for (int next = cur - 1; next >= 1; --next) {
        if (cur % 2 == 1 && next % 2 == 1) continue;
        acc.push_back(next);
        gen_with_largest(acc, smallest_even, out);
        acc.pop_back();
    }
    if (!smallest_even || cur % 2 == 0) out.push_back(Partition(acc));
}

bool canonical_before(const PEPartition& a, const PEPartition& b) {
    if (a.m_parts().parts() != b.m_parts().parts()) {
        return a.m_parts().parts() > b.m_parts().parts();
    }
    return a.n_parts().parts() > b.n_parts().parts();
}

std::vector<Partition> component_lists(PEType type, bool m_side, int total) {
    const bool euclid = m_side ? (type == PEType::time || type == PEType::light)
                               : (type == PEType::space || type == PEType::light);
    return euclid ? euclidean_partitions(total) : component_partitions(total);
}

std::vector<Partition> component_lists_with_largest(PEType type, bool m_side, int largest) {
    const bool euclid = m_side ? (type == PEType::time || type == PEType::light)
                               : (type == PEType::space || type == PEType::light);
    return euclid ? euclidean_partitions_with_largest(largest)
                  : component_partitions_with_largest(largest);
}

} // namespace

std::vector<Partition> euclidean_partitions(int total) {
    std::vector<Partition> out;
    if (total < 2) return out;
    std::vector<int> acc;
    gen_by_sum(total, total, false, true, acc, out);
    return out;
}

std::vector<Partition> component_partitions(int total) {
    std::vector<Partition> out;
    if (total < 1) return out;
    std::vector<int> acc;
    gen_by_sum(total, total, false, false, acc, out);
    return out;
}

std::vector<Partition> irreducible_partitions(int parts, int largest) {
    std::vector<Partition> out;
    if (parts < 1 || largest < 2) return out;
    std::vector<int> acc{largest};
    gen_chain(acc, parts - 1, 2, 2, out);
    return out;
}

std::vector<Partition> reduced_partitions(int parts, int largest) {
    std::vector<Partition> out;
    if (parts < 1 || largest < 1) return out;
    std::vector<int> acc{largest};
    gen_chain(acc, parts - 1, 1, 2, out);
    return out;
}

std::vector<Partition> euclidean_partitions_with_shape(int parts, int largest) {
    std::vector<Partition> out;
    if (parts < 1 || largest < parts) return out;
    std::vector<int> acc{largest};
    gen_shape(acc, parts - 1, out);
    return out;
}

std::vector<Partition> euclidean_partitions_with_largest(int largest) {
    std::vector<Partition> out;
    if (largest < 1) return out;
    std::vector<int> acc{largest};
    gen_with_largest(acc, true, out);
    return out;
}

std::vector<Partition> component_partitions_with_largest(int largest) {
    std::vector<Partition> out;
    if (largest < 1) return out;
    std::vector<int> acc{largest};
    gen_with_largest(acc, false, out);
    return out;
}

std::vector<PEPartition> pe_partitions(PEType type, int total) {
    std::vector<PEPartition> out;
    for (int m_sum = 1; m_sum < total; ++m_sum) {
        const auto m_lists = component_lists(type, true, m_sum);
        if (m_lists.empty()) continue;
        const auto n_lists = component_lists(type, false, total - m_sum);
        for (const Partition& m : m_lists) {
            for (const Partition& n : n_lists) {
                out.emplace_back(m, n, type);
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

std::vector<PEPartition> pe_partitions_by_largest_pair(PEType type, int largest_pair) {
    std::vector<PEPartition> out;
    for (int m1 = 1; m1 < largest_pair; ++m1) {
        const auto m_lists = component_lists_with_largest(type, true, m1);
        if (m_lists.empty()) continue;
        const auto n_lists = component_lists_with_largest(type, false, largest_pair - m1);
        for (const Partition& m : m_lists) {
            for (const Partition& n : n_lists) {
                out.emplace_back(m, n, type);
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

} // namespace bpart
