#include "taitkit/form_ops.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace taitkit {

SymmetricIntForm block_sum(const SymmetricIntForm& f, const SymmetricIntForm& g) {
  SymmetricIntForm out(f.dim() + g.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i; j < f.dim(); ++j) out.set(i, j, f.at(i, j));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) out.set(f.dim() + i, f.dim() + j, g.at(i, j));
  return out;
}

SymmetricIntForm add_twists(const SymmetricIntForm& f, int index, int m) {
  if (index < 0 || index >= f.dim())
    throw Error(ErrorKind::IndexOutOfRange, "twist index " + std::to_string(index) + " outside 0.." + std::to_string(f.dim() - 1));
  if (m == 0) throw Error(ErrorKind::IndexOutOfRange, "twist count must be nonzero");
  SymmetricIntForm out = f;
  out.add(index, index, m);
  return out;
}

SymmetricIntForm restrict(const SymmetricIntForm& f, const std::vector<int>& keep) {
  std::vector<int> idx = keep;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || i >= f.dim()) throw Error(ErrorKind::IndexOutOfRange, "restriction index out of range");
  SymmetricIntForm out(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b) out.set(static_cast<int>(a), static_cast<int>(b), f.at(idx[a], idx[b]));
  return out;
}

namespace {

std::int64_t det_small(const std::array<std::int64_t, 9>& u, int m) {
  if (m == 0) return 1;
  if (m == 1) return u[0];
  if (m == 2) return u[0] * u[3] - u[1] * u[2];
  return u[0] * (u[4] * u[8] - u[5] * u[7]) - u[1] * (u[3] * u[8] - u[5] * u[6]) + u[2] * (u[3] * u[7] - u[4] * u[6]);
}

}  // namespace

bool congruent_small(const SymmetricIntForm& f, const SymmetricIntForm& g, int coeff_bound) {
  if (f.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "forms have different dimensions");
  const int m = f.dim();
  if (m > 3) throw Error(ErrorKind::DimensionMismatch, "bounded congruence search supports dim <= 3");
  if (coeff_bound < 1) throw Error(ErrorKind::DimensionMismatch, "coefficient bound must be at least 1");
  if (m == 0) return true;
  if (determinant(f) != determinant(g)) return false;
  if (inertia(f) != inertia(g)) return false;

  const int cells = m * m;
  std::array<std::int64_t, 9> u{};
  std::fill(u.begin(), u.begin() + cells, -coeff_bound);
  for (;;) {
    const std::int64_t det = det_small(u, m);
    if (det == 1 || det == -1) {
      bool match = true;
      // (U^T f U)_ij = sum_kl U_ki f_kl U_lj, U stored row-major.
      for (int i = 0; i < m && match; ++i)
        for (int j = i; j < m && match; ++j) {
          std::int64_t s = 0;
          for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) s += u[k * m + i] * f.at(k, l) * u[l * m + j];
          match = s == g.at(i, j);
        }
      if (match) return true;
    }
    int i = 0;
    while (i < cells && u[i] == coeff_bound) u[i++] = -coeff_bound;
    if (i == cells) return false;
    ++u[i];
  }
}

}  // namespace taitkit
