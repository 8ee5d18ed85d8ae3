#ifndef NLCS_SHIM_NLOHMANN_JSON_FWD_HPP
#define NLCS_SHIM_NLOHMANN_JSON_FWD_HPP
// The vendored library ships as one header without a separate
// json_fwd.hpp, so the forward-declaration path resolves to the full
// header. Costs compile time only.
#include <json.hpp>
#endif
