#pragma once

#include "qmlab/igusa.hpp"

#include <array>
#include <complex>

namespace qm {

// I2, I4, I6, I10 of sum a_k x^(6-k) y^k from root differences (a0 != 0).
// Independent of the transvectant code.
IgusaSet<std::complex<double>> root_oracle(const std::array<std::complex<double>, 7>& a);

} // namespace qm
