#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "taitkit/error.hpp"

namespace taitkit {

/// Symmetric integer matrix, row-major. Stands for a bilinear pairing on a
/// free abelian group in a fixed basis.
class SymmetricIntForm {
 public:
  SymmetricIntForm() = default;
  explicit SymmetricIntForm(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, 0) {}
  /// Throws DimensionMismatch on ragged or asymmetric input.
  SymmetricIntForm(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static SymmetricIntForm from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int dim() const noexcept { return dim_; }
  std::int64_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, std::int64_t value);
  void add(int i, int j, std::int64_t delta);

  /// v^T F v for an integer vector of length dim.
  std::int64_t evaluate(const std::vector<std::int64_t>& v) const;

  std::vector<std::vector<std::int64_t>> rows() const;
  std::string to_string() const;

  friend bool operator==(const SymmetricIntForm&, const SymmetricIntForm&) = default;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> entries_;
};

enum class Definiteness { Positive, Negative, Indefinite, Degenerate };

const char* to_string(Definiteness d) noexcept;

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const noexcept { return positive - negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact fraction-free congruence diagonalization.
Inertia inertia(const SymmetricIntForm& f);

/// Positive iff the inertia is (dim, 0, 0); the zero-dimensional form counts
/// as Positive.
Definiteness definiteness(const SymmetricIntForm& f);

/// Exact determinant (Bareiss); 1 for dim 0.
std::int64_t determinant(const SymmetricIntForm& f);

}  // namespace taitkit
