#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sepwalk/rng.hpp"
#include "sepwalk/window.hpp"

namespace sepwalk {

/// Occupancy field {0,1} over the simulated region of a Window.
/// Site coordinates are absolute lattice positions.
class Configuration {
  public:
    Configuration() = default;
    Configuration(Site lo, std::vector<std::uint8_t> occ, double density = no_density())
        : lo_(lo), occ_(std::move(occ)), density_(density) {}

    /// i.i.d. Bernoulli(rho) occupancy over the simulated region.
    static Configuration bernoulli(double rho, const Window& win, std::uint64_t seed) {
        if (!(rho > 0.0 && rho < 1.0))
            throw std::invalid_argument("Configuration::bernoulli: rho must be in (0,1)");
        SplitMix64 g(seed);
        std::vector<std::uint8_t> occ(static_cast<std::size_t>(win.n_sites()));
        for (auto& v : occ) v = sepwalk::bernoulli(g, rho) ? 1 : 0;
        return Configuration(win.sim_lo(), std::move(occ), rho);
    }

    /// Deterministic all-ones / all-zeros field (the rho -> 1, rho -> 0
    /// limits are excluded from bernoulli()).
    static Configuration constant(int value, const Window& win) {
        if (value != 0 && value != 1)
            throw std::invalid_argument("Configuration::constant: value must be 0 or 1");
        std::vector<std::uint8_t> occ(static_cast<std::size_t>(win.n_sites()),
                                      static_cast<std::uint8_t>(value));
        return Configuration(win.sim_lo(), std::move(occ), no_density());
    }

    Site lo() const { return lo_; }
    Site hi() const { return lo_ + static_cast<Site>(occ_.size()) - 1; }
    Site size() const { return static_cast<Site>(occ_.size()); }
    bool contains(Site x) const { return x >= lo() && x <= hi(); }
    double density() const { return density_; }
    static double no_density() { return std::numeric_limits<double>::quiet_NaN(); }

    int at(Site x) const {
        require(x);
        return occ_[static_cast<std::size_t>(x - lo_)];
    }
    void set(Site x, int v) {
        require(x);
        occ_[static_cast<std::size_t>(x - lo_)] = static_cast<std::uint8_t>(v);
    }

    /// Exchange the values at x and y; an involution, identity when x == y.
    void swap_sites(Site x, Site y) {
        require(x);
        require(y);
        std::swap(occ_[static_cast<std::size_t>(x - lo_)], occ_[static_cast<std::size_t>(y - lo_)]);
    }
    Configuration swapped(Site x, Site y) const {
        Configuration c = *this;
        c.swap_sites(x, y);
        return c;
    }

    /// Pointwise complement; a Bernoulli(rho) sample becomes Bernoulli(1-rho).
    Configuration complemented() const {
        Configuration c = *this;
        for (auto& v : c.occ_) v = static_cast<std::uint8_t>(1 - v);
        c.density_ = std::isnan(density_) ? density_ : 1.0 - density_;
        return c;
    }

    std::int64_t particle_count() const {
        std::int64_t n = 0;
        for (auto v : occ_) n += v;
        return n;
    }

    /// Particles in the half-open site interval [a, b).
    std::int64_t count_in(Site a, Site b) const {
        std::int64_t n = 0;
        for (Site x = a; x < b; ++x) n += at(x);
        return n;
    }

    const std::vector<std::uint8_t>& raw() const { return occ_; }
    std::vector<std::uint8_t>& raw() { return occ_; }

    bool operator==(const Configuration& o) const { return lo_ == o.lo_ && occ_ == o.occ_; }

  private:
    void require(Site x) const {
        if (!contains(x)) throw std::invalid_argument("Configuration: site out of range");
    }

    Site lo_ = 0;
    std::vector<std::uint8_t> occ_;
    double density_ = no_density();
};

}  // namespace sepwalk
