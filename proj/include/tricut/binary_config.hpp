#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tricut {

/// A cut candidate: one spin in {-1, +1} per node.
class BinaryConfig {
public:
    BinaryConfig() = default;
    explicit BinaryConfig(std::vector<std::int8_t> spins) : s_(std::move(spins)) {
        for (std::int8_t x : s_)
            if (x != 1 && x != -1) throw std::invalid_argument("spins must be +1 or -1");
    }

    static BinaryConfig all_up(int n) {
        return BinaryConfig(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1));
    }

    int size() const { return static_cast<int>(s_.size()); }
    std::int8_t operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int8_t>& spins() const { return s_; }

    BinaryConfig flipped(int node) const {
        std::vector<std::int8_t> s = s_;
        s[static_cast<std::size_t>(node)] = static_cast<std::int8_t>(-s[static_cast<std::size_t>(node)]);
        return BinaryConfig(std::move(s));
    }

    bool operator==(const BinaryConfig& other) const { return s_ == other.s_; }

private:
    std::vector<std::int8_t> s_;
};

}  // namespace tricut
