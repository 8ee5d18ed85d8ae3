#ifndef NLCS_SHIM_NLOHMANN_JSON_HPP
#define NLCS_SHIM_NLOHMANN_JSON_HPP
// The vendored single header lives at vendor/json.hpp; this shim keeps
// the conventional <nlohmann/json.hpp> include path working.
#include <json.hpp>
#endif
