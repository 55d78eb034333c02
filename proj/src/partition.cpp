#include "bpart/partition.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace bpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] <= parts_[i]) {
            throw std::invalid_argument("partition parts must be strictly decreasing");
        }
    }
}

Partition Partition::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty partition text");
    const std::string body = text.substr(begin, end - begin + 1);

    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = body.find('+', pos);
        const std::string token = body.substr(pos, next == std::string::npos ? next : next - pos);
        if (token.empty()) throw std::invalid_argument("malformed partition text '" + text + "'");
        for (char ch : token) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("malformed partition text '" + text + "'");
            }
        }
        if (token.size() > 9) throw std::invalid_argument("partition part out of range in '" + text + "'");
        parts.push_back(std::atoi(token.c_str()));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Partition(parts); // enforces positive, strictly decreasing
}

int Partition::largest() const {
    if (parts_.empty()) throw std::invalid_argument("empty partition has no largest part");
    return parts_.front();
}

int Partition::smallest() const {
    if (parts_.empty()) throw std::invalid_argument("empty partition has no smallest part");
    return parts_.back();
}

long long Partition::sum() const {
    long long total = 0;
    for (int p : parts_) total += p;
    return total;
}

int Partition::odd_part_count() const {
    int count = 0;
    for (int p : parts_) count += p % 2;
    return count;
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += "+";
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool no_adjacent_odds(const Partition& p) {
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i - 1] % 2 == 1 && parts[i] % 2 == 1) return false;
    }
    return true;
}

bool is_euclidean(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("is_euclidean requires a nonempty partition");
    return p.smallest() % 2 == 0 && no_adjacent_odds(p);
}

namespace {

bool steps_at_most_two(const Partition& p) {
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i - 1] - parts[i] > 2) return false;
    }
    return true;
}

} // namespace

bool is_irreducible(const Partition& p) {
    if (p.empty() || !is_euclidean(p)) {
        throw std::invalid_argument("is_irreducible requires a Euclidean partition");
    }
    return p.smallest() == 2 && steps_at_most_two(p);
}

bool is_reduced(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("is_reduced requires a nonempty partition");
    return no_adjacent_odds(p) && p.smallest() <= 2 && steps_at_most_two(p);
}

int weight_exponent(const Partition& p) {
    if (!is_euclidean(p)) throw std::invalid_argument("weight is defined only on Euclidean partitions");
    const int d = p.length();
    const int s = p.odd_part_count();
    return (p.largest() % 2 == 0) ? d - 1 - 2 * s : d - 2 * s;
}

BigInt phi_weight(const Partition& p) {
    return BigInt(1) << weight_exponent(p);
}

Decomposition decompose(const Partition& p) {
    if (!is_euclidean(p)) throw std::invalid_argument("decompose requires a Euclidean partition");
    const auto& parts = p.parts();
    const int d = p.length();

    // Build the irreducible part from the smallest part upward: it starts
    // at 2, and each step up adds 1 or 2 so that parities match the input.
    std::vector<int> core(static_cast<std::size_t>(d));
    std::vector<int> padding(static_cast<std::size_t>(d));
    int below = 0; // 0 seeds the smallest core part at 2 (the input's smallest is even)
    for (int i = d - 1; i >= 0; --i) {
        int next = below + 1;
        if (next % 2 != parts[static_cast<std::size_t>(i)] % 2) ++next;
        core[static_cast<std::size_t>(i)] = next;
        padding[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] - next;
        below = next;
    }
    return Decomposition{Partition(core), padding};
}

Partition compose(const Partition& irr, const std::vector<int>& padding) {
    if (irr.empty() || !is_irreducible(irr)) {
        throw std::invalid_argument("compose requires an irreducible partition");
    }
    if (static_cast<int>(padding.size()) != irr.length()) {
        throw std::invalid_argument("padding length must match the partition length");
    }
    for (std::size_t i = 0; i < padding.size(); ++i) {
        if (padding[i] < 0 || padding[i] % 2 != 0) {
            throw std::invalid_argument("padding parts must be even and nonnegative");
        }
        if (i > 0 && padding[i - 1] < padding[i]) {
            throw std::invalid_argument("padding must be nonincreasing");
        }
    }
    std::vector<int> parts(padding.size());
    for (std::size_t i = 0; i < padding.size(); ++i) {
        parts[i] = irr.parts()[i] + padding[i];
    }
    return Partition(parts);
}

std::string to_string(PEType type) {
    switch (type) {
        case PEType::space: return "space";
        case PEType::time: return "time";
        case PEType::light: return "light";
    }
    return "?";
}

PEType pe_type_from_string(const std::string& name) {
    if (name == "space") return PEType::space;
    if (name == "time") return PEType::time;
    if (name == "light") return PEType::light;
    throw std::invalid_argument("unknown pseudo-Euclidean type '" + name + "'");
}

PEPartition::PEPartition(Partition m, Partition n, PEType type)
    : m_(std::move(m)), n_(std::move(n)), type_(type) {
    if (m_.empty() || n_.empty()) {
        throw std::invalid_argument("both components of a pseudo-Euclidean partition must be nonempty");
    }
}

PEPartition PEPartition::parse(const std::string& text, PEType type) {
    const std::size_t bar = text.find('|');
    if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
        throw std::invalid_argument("pseudo-Euclidean partition text needs exactly one '|'");
    }
    return PEPartition(Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1)), type);
}

bool is_pe_member(const PEPartition& p) {
    if (!no_adjacent_odds(p.m_parts()) || !no_adjacent_odds(p.n_parts())) return false;
    switch (p.type()) {
        case PEType::space: return p.n_parts().smallest() % 2 == 0;
        case PEType::time: return p.m_parts().smallest() % 2 == 0;
        case PEType::light:
            return p.m_parts().smallest() % 2 == 0 && p.n_parts().smallest() % 2 == 0;
    }
    return false;
}

} // namespace bpart
