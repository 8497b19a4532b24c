#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sepwalk {

using Site = std::int64_t;

/// Finite space-time box on which the process is realised.
///
/// The region of interest is the inclusive site range [x_min, x_max]; the
/// simulated region adds `buffer` sites on each side. The simulated region is
/// closed: no arrows cross its boundary, so particle number is conserved and
/// stirring paths cannot leave it. Values inside the region of interest are
/// faithful to the infinite-lattice construction as long as the buffer
/// exceeds the reach of boundary influence, which spreads like a rate-1
/// Poisson count; the default buffer of ceil(2*t_max)+20 makes that event
/// negligible over the horizon.
struct Window {
    Site x_min = 0;
    Site x_max = 0;
    double t_max = 0.0;
    Site buffer = 0;

    Window() = default;
    Window(Site x_min_, Site x_max_, double t_max_, Site buffer_)
        : x_min(x_min_), x_max(x_max_), t_max(t_max_), buffer(buffer_) {
        if (x_min >= x_max) throw std::invalid_argument("Window: x_min must be < x_max");
        if (!(t_max > 0.0)) throw std::invalid_argument("Window: t_max must be > 0");
        if (buffer < 0) throw std::invalid_argument("Window: buffer must be >= 0");
    }

    /// Window with the default buffer rule.
    static Window with_default_buffer(Site x_min, Site x_max, double t_max) {
        return Window(x_min, x_max, t_max, default_buffer(t_max));
    }

    static Site default_buffer(double t_max) {
        return static_cast<Site>(std::ceil(2.0 * t_max)) + 20;
    }

    Site sim_lo() const { return x_min - buffer; }
    Site sim_hi() const { return x_max + buffer; }  // inclusive
    Site n_sites() const { return sim_hi() - sim_lo() + 1; }
    /// Edges are indexed by their left site: edge e joins sites e and e+1.
    Site edge_lo() const { return sim_lo(); }
    Site edge_hi() const { return sim_hi() - 1; }  // inclusive
    Site n_edges() const { return n_sites() - 1; }

    bool contains_site(Site x) const { return x >= sim_lo() && x <= sim_hi(); }
    bool contains_interest(Site x) const { return x >= x_min && x <= x_max; }
    bool contains_time(double t) const { return t >= 0.0 && t <= t_max; }
    bool has_edge(Site e) const { return e >= edge_lo() && e <= edge_hi(); }

    void require_site(Site x, const char* who) const {
        if (!contains_site(x))
            throw std::invalid_argument(std::string(who) + ": site " + std::to_string(x) +
                                        " outside simulated region [" + std::to_string(sim_lo()) +
                                        "," + std::to_string(sim_hi()) + "]");
    }
    void require_time(double t, const char* who) const {
        if (!contains_time(t))
            throw std::invalid_argument(std::string(who) + ": time " + std::to_string(t) +
                                        " outside [0," + std::to_string(t_max) + "]");
    }
};

}  // namespace sepwalk
