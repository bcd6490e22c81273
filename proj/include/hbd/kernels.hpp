#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// hbd::kernels::serial and an OpenMP version in hbd::kernels::omp; both
// must return identical results for identical inputs.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hbd/core.hpp"
#include "hbd/significance.hpp"

namespace hbd::kernels {

/// result[k-1] holds the sorted distinct k-factors of `text`, 1 <= k <= max_len.
using FactorSets = std::vector<std::vector<Block>>;

namespace serial {

FactorSets collect_factors(std::string_view text, std::size_t max_len);

std::vector<SignificanceVerdict> classify(const LanguageTable& table,
                                          std::span<const Block> candidates,
                                          std::size_t horizon);

}  // namespace serial

namespace omp {

FactorSets collect_factors(std::string_view text, std::size_t max_len);

std::vector<SignificanceVerdict> classify(const LanguageTable& table,
                                          std::span<const Block> candidates,
                                          std::size_t horizon);

}  // namespace omp

int max_threads();

}  // namespace hbd::kernels
