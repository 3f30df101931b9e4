#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mcens/errors.hpp"

namespace mcens {

// All internal arithmetic is binary64; file payloads may be binary32.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// A bijection on {0..n-1}, stored as mapping[i] = image of i.
struct Permutation {
  std::vector<Index> mapping;

  Index size() const { return static_cast<Index>(mapping.size()); }

  bool is_identity() const {
    for (Index i = 0; i < size(); ++i)
      if (mapping[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  // Throws ArgumentError unless mapping is a bijection.
  void validate() const;
};

}  // namespace mcens
