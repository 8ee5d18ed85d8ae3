#include "nlcs/config.hpp"

#include <cstdlib>
#include <string>

namespace nlcs {

int max_dim() {
    static const int cap = [] {
        if (const char* env = std::getenv("NLCS_MAX_DIM")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 4096;
    }();
    return cap;
}

}  // namespace nlcs
