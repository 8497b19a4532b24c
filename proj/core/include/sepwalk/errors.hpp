#pragma once

#include <stdexcept>
#include <string>

namespace sepwalk {

/// A query or a traced path left the simulated region, i.e. the configured
/// buffer was too small for the requested computation.
class OutOfWindowError : public std::runtime_error {
  public:
    explicit OutOfWindowError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested scale schedule cannot meet its density target.
class ScheduleInfeasibleError : public std::runtime_error {
  public:
    ScheduleInfeasibleError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_density_product(achieved) {}
    double achieved_density_product;
};

/// An exact computation was asked for an instance beyond its size cap.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sepwalk
