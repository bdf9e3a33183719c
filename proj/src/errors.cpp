#include "flatwitness/errors.hpp"

#include <fmt/format.h>

namespace flatwitness {

NotARelation::NotARelation(std::size_t point, double residual)
    : Error(fmt::format("not a linear relation: residual {:.3e} at point {}",
                        residual, point)),
      point_(point),
      residual_(residual) {}

GridTooCoarse::GridTooCoarse(std::size_t shell)
    : Error(fmt::format("grid too coarse: arc shell {} has no samples", shell)),
      shell_(shell) {}

ScaleOverflow::ScaleOverflow(double max_log_modulus, double suggested_rescale)
    : Error(fmt::format(
          "exp overflow: log-modulus reaches {:.3e}; rescale input by {:.3e}",
          max_log_modulus, suggested_rescale)),
      suggested_rescale_(suggested_rescale) {}

NotInner::NotInner(double boundary_deviation)
    : Error(fmt::format("not an inner function: max ||b|-1| = {:.3e}",
                        boundary_deviation)),
      deviation_(boundary_deviation) {}

}  // namespace flatwitness
