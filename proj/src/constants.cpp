#include "diracwell/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diracwell {

WellConfig to_internal(const WellConfig& config, const PhysicalConstants& constants)
{
    if (!std::isfinite(config.radius_nm) || config.radius_nm <= 0.0)
        throw std::invalid_argument("well radius must be positive, got " + std::to_string(config.radius_nm) + " nm");
    if (!std::isfinite(config.potential_ev) || config.potential_ev <= 0.0)
        throw std::invalid_argument("well potential must be positive, got " + std::to_string(config.potential_ev) + " eV");
    if (config.potential_ev >= constants.rest_energy)
        throw std::invalid_argument("well potential " + std::to_string(config.potential_ev)
                                    + " eV must stay below the electron rest energy "
                                    + std::to_string(constants.rest_energy) + " eV");
    if (config.azimuthal_l < 0)
        throw std::invalid_argument("azimuthal quantum number must be >= 0");
    if (config.pz != 0.0)
        throw std::invalid_argument("only pz = 0 states are supported");
    return config;
}

} // namespace diracwell
