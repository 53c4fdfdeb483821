#pragma once

#include <cstdint>
#include <vector>

#include "bperc/config.hpp"
#include "bperc/rect.hpp"
#include "bperc/rng.hpp"

namespace bperc {

/// One synchronous update of the bootstrap rule, restricted to cfg.domain.
/// Sites outside the domain are permanently healthy. Result is a superset of
/// the input.
Config step(const Config& cfg, ModelKind model);

/// Least fixed point of `step` containing cfg. Work-queue algorithm, O(area)
/// total work; never iterates full-grid sweeps to convergence.
Config closure(const Config& cfg, ModelKind model);

/// True iff closure(cfg, model) covers cfg.domain.
bool is_internally_spanned(const Config& cfg, ModelKind model);

/// I.i.d. Bernoulli(p) occupancy on r, one uniform per site in row-major
/// order, occupied iff u < p. Sharing a stream across two calls with
/// p1 <= p2 therefore yields nested configurations.
Config sample_field(const Rect& r, double p, RngStream stream);

namespace detail {

/// Reusable scratch for running many closures without reallocating. Reset is
/// O(1) per run via per-site epoch stamps. Not thread-safe; use one per
/// worker.
class SpanScratch {
  public:
    /// Closure of `occupied` (local row-major indices into a w*h grid).
    /// Returns the number of infected sites at the fixed point; fills
    /// `out_infected` with their local indices if non-null. Stops early at
    /// w*h when `early_exit_on_full`.
    std::int64_t run(std::int32_t w, std::int32_t h,
                     const std::vector<std::int32_t>& occupied, ModelKind model,
                     std::vector<std::int32_t>* out_infected = nullptr,
                     bool early_exit_on_full = false);

    bool spans(std::int32_t w, std::int32_t h,
               const std::vector<std::int32_t>& occupied, ModelKind model) {
        return run(w, h, occupied, model, nullptr, true) == std::int64_t(w) * h;
    }

  private:
    void ensure(std::size_t n);
    std::uint8_t& cell(std::size_t i);

    std::vector<std::uint8_t> state_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::int32_t> queue_;
    std::uint32_t epoch_ = 0;
};

/// Closure over a <=25-site rectangle packed into a bitmask (bit y*w+x).
/// Used by exhaustive enumeration and small-grid Monte Carlo trials.
std::uint32_t closure_mask(std::uint32_t occupied, std::int32_t w, std::int32_t h,
                           ModelKind model);

}  // namespace detail
}  // namespace bperc
