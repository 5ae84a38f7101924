#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandcol {

/// One color in 1..k per vertex; vertices are indexed 0..n-1.
class Coloring {
public:
    Coloring() = default;

    /// Throws std::invalid_argument if k < 1 or a color lies outside 1..k.
    Coloring(std::vector<int> colors, int k) : colors_(std::move(colors)), k_(k) {
        if (k_ < 1)
            throw std::invalid_argument("color budget must be positive");
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (colors_[i] < 1 || colors_[i] > k_)
                throw std::invalid_argument("vertex " + std::to_string(i + 1) + " has color " +
                                            std::to_string(colors_[i]) + " outside 1.." +
                                            std::to_string(k_));
        }
    }

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return colors_.size(); }
    int operator[](std::size_t v) const noexcept { return colors_[v]; }
    std::span<const int> colors() const noexcept { return colors_; }

    /// Unchecked; callers guarantee 1 <= c <= k.
    void set(std::size_t v, int c) noexcept { colors_[v] = c; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

} // namespace bandcol
