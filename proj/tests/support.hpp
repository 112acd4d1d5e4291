#pragma once

// Conversions between library types and the oracle's plain containers.

#include <filesystem>

#include "oracles/oracles.hpp"
#include "pexc/matrix.hpp"
#include "pexc/schreier_sims.hpp"

namespace support {

inline oracle::Mat to_oracle(const pexc::Matrix& m) {
  oracle::Mat out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<int>(m(i, j));
  return out;
}

inline std::vector<oracle::Mat> to_oracle(const std::vector<pexc::Matrix>& ms) {
  std::vector<oracle::Mat> out;
  for (const auto& m : ms) out.push_back(to_oracle(m));
  return out;
}

inline oracle::Perm to_oracle(const pexc::Perm& p) { return oracle::Perm(p.begin(), p.end()); }

inline std::vector<oracle::Perm> to_oracle(const std::vector<pexc::Perm>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(to_oracle(p));
  return out;
}

inline std::filesystem::path data_dir() { return PEXC_TEST_DATA_DIR; }

}  // namespace support
