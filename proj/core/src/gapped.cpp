#include "gw/gapped.hpp"

#include <stdexcept>

namespace gw {

void Params::validate() const {
    if (alpha < Rat(1)) throw std::invalid_argument("alpha must be >= 1");
    if (beta <= Rat(0) || beta >= Rat(1)) throw std::invalid_argument("beta must be in (0,1)");
    if (gamma <= Rat(0) || gamma > Rat(1)) throw std::invalid_argument("gamma must be in (0,1]");
}

} // namespace gw
