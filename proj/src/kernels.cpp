#include "hbd/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <string_view>
#include <unordered_set>

namespace hbd::kernels {

namespace {

std::vector<Block> factors_of_length(std::string_view text, std::size_t k) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + k <= text.size(); ++i) seen.insert(text.substr(i, k));
  std::vector<Block> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

namespace serial {

FactorSets collect_factors(std::string_view text, std::size_t max_len) {
  FactorSets out(max_len);
  for (std::size_t k = 1; k <= max_len; ++k) out[k - 1] = factors_of_length(text, k);
  return out;
}

std::vector<SignificanceVerdict> classify(const LanguageTable& table,
                                          std::span<const Block> candidates,
                                          std::size_t horizon) {
  std::vector<SignificanceVerdict> out;
  out.reserve(candidates.size());
  for (const auto& w : candidates) out.push_back(is_significant(table, w, horizon));
  return out;
}

}  // namespace serial

namespace omp {

FactorSets collect_factors(std::string_view text, std::size_t max_len) {
  FactorSets out(max_len);
  const auto n = static_cast<std::ptrdiff_t>(max_len);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = n; k >= 1; --k) {
    out[static_cast<std::size_t>(k) - 1] = factors_of_length(text, static_cast<std::size_t>(k));
  }
  return out;
}

std::vector<SignificanceVerdict> classify(const LanguageTable& table,
                                          std::span<const Block> candidates,
                                          std::size_t horizon) {
  std::vector<SignificanceVerdict> out(candidates.size());
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  // Each slot is written by exactly one iteration; the first exception wins.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] =
          is_significant(table, candidates[static_cast<std::size_t>(i)], horizon);
    } catch (...) {
#pragma omp critical(hbd_classify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace omp

int max_threads() { return omp_get_max_threads(); }

}  // namespace hbd::kernels
