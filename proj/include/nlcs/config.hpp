#ifndef NLCS_CONFIG_HPP
#define NLCS_CONFIG_HPP

namespace nlcs {

// Hard cap on adaptive truncation, overridable through NLCS_MAX_DIM.
int max_dim();

constexpr double kDefaultTruncTol = 1e-12;

}  // namespace nlcs

#endif
