#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bperc/rect.hpp"

namespace bperc {

/// Occupancy assignment over a rectangle, stored as a dense row-major bitmap.
/// Immutable by convention once returned from an operation.
class Config {
  public:
    explicit Config(Rect domain)
        : domain_(domain), words_((std::size_t(domain.area()) + 63) / 64, 0) {}

    const Rect& domain() const { return domain_; }

    bool occupied(std::int32_t x, std::int32_t y) const {
        std::size_t i = index(x, y);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::int32_t x, std::int32_t y, bool v = true) {
        std::size_t i = index(x, y);
        if (v)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::int64_t occupied_count() const;
    bool is_full() const { return occupied_count() == domain_.area(); }
    bool is_empty() const { return occupied_count() == 0; }

    /// True if no site of `r` (must lie in the domain) is occupied.
    bool vacant(const Rect& r) const;

    bool operator==(const Config& o) const {
        return domain_ == o.domain_ && words_ == o.words_;
    }

    /// Row-major site index, y-major from the bottom row.
    std::size_t index(std::int32_t x, std::int32_t y) const {
        return std::size_t(y - domain_.b) * domain_.width() + std::size_t(x - domain_.a);
    }

  private:
    Rect domain_;
    std::vector<std::uint64_t> words_;
};

/// Grid text format: one line per row from y=domain.d down to y=domain.b,
/// '#'=occupied, '.'=healthy, newline-terminated, no trailing whitespace.
std::string to_grid_text(const Config& cfg);

/// Parse the grid text format. The domain is anchored at (1,1).
Config config_from_grid_text(const std::string& text);

}  // namespace bperc
