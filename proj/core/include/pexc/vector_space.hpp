#pragma once

#include <cstdint>
#include <vector>

#include "pexc/matrix.hpp"

namespace pexc {

/// Index arithmetic on GF(p)^n, where a vector is the integer sum x_i p^i.
class IndexSpace {
 public:
  IndexSpace(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::uint32_t unit(std::size_t j) const { return pow_[j]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t scale(std::uint32_t c, std::uint32_t a) const;
  std::uint32_t digit(std::uint32_t v, std::size_t j) const { return (v / pow_[j]) % p_; }

  /// Image of v under the linear map whose basis images are `rows`.
  std::uint32_t apply_rows(const std::vector<std::uint32_t>& rows, std::uint32_t v) const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::uint64_t size_;
  std::vector<std::uint32_t> pow_;
  // Digit-chunk addition table for odd p.
  std::uint32_t chunk_base_ = 0;
  std::vector<std::uint8_t> chunk_add_;
};

/// Right action of a list of GF(p)-matrices on vector indices, with
/// per-generator lookup tables over digit chunks.
class VectorAction {
 public:
  /// Matrices must be square over the same prime field.  Throws SpaceTooLarge
  /// when p^n exceeds `max_vectors`.
  VectorAction(const std::vector<Matrix>& gens, std::uint64_t max_vectors);

  const IndexSpace& space() const { return sp_; }
  std::size_t num_gens() const { return rows_.size(); }
  std::uint64_t size() const { return sp_.size(); }
  std::uint32_t apply(std::size_t g, std::uint32_t v) const;
  /// Basis images of generator g.
  const std::vector<std::uint32_t>& rows(std::size_t g) const { return rows_[g]; }

 private:
  IndexSpace sp_;
  std::size_t chunk_digits_;
  std::uint32_t chunk_size_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::uint32_t>> table_;  // per generator: chunks * chunk_size_
};

/// Index of a GF(p) row vector, and the basis-image encoding of a matrix.
std::vector<std::uint32_t> matrix_rows_to_indices(const Matrix& m);
Matrix indices_to_matrix(const Field& fp, const std::vector<std::uint32_t>& rows);

}  // namespace pexc
