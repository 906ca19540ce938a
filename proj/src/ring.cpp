#include "foldprod/ring.hpp"

namespace foldprod {

Ring Ring::standard(size_t k, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(k);
    for (size_t i = 1; i <= k; ++i) names.push_back(stem + std::to_string(i));
    return Ring(std::move(names));
}

} // namespace foldprod
