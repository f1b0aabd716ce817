#include "taitkit/int_form.hpp"

#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace taitkit {

using boost::multiprecision::cpp_int;

SymmetricIntForm::SymmetricIntForm(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

SymmetricIntForm SymmetricIntForm::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  SymmetricIntForm f(static_cast<int>(rows.size()));
  for (int i = 0; i < f.dim_; ++i) {
    if (static_cast<int>(rows[i].size()) != f.dim_) throw Error(ErrorKind::DimensionMismatch, "form rows must be square");
    for (int j = 0; j < f.dim_; ++j) f.entries_[static_cast<std::size_t>(i) * f.dim_ + j] = rows[i][j];
  }
  for (int i = 0; i < f.dim_; ++i)
    for (int j = 0; j < i; ++j)
      if (f.at(i, j) != f.at(j, i)) throw Error(ErrorKind::DimensionMismatch, "form entries must be symmetric");
  return f;
}

void SymmetricIntForm::set(int i, int j, std::int64_t value) {
  entries_[static_cast<std::size_t>(i) * dim_ + j] = value;
  entries_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

void SymmetricIntForm::add(int i, int j, std::int64_t delta) {
  entries_[static_cast<std::size_t>(i) * dim_ + j] += delta;
  if (i != j) entries_[static_cast<std::size_t>(j) * dim_ + i] += delta;
}

std::int64_t SymmetricIntForm::evaluate(const std::vector<std::int64_t>& v) const {
  std::int64_t total = 0;
  for (int i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < dim_; ++j) row += at(i, j) * v[j];
    total += v[i] * row;
  }
  return total;
}

std::vector<std::vector<std::int64_t>> SymmetricIntForm::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_, std::vector<std::int64_t>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out[i][j] = at(i, j);
  return out;
}

std::string SymmetricIntForm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < dim_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

const char* to_string(Definiteness d) noexcept {
  switch (d) {
    case Definiteness::Positive: return "Positive";
    case Definiteness::Negative: return "Negative";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

Inertia inertia(const SymmetricIntForm& f) {
  int m = f.dim();
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = f.at(i, j);

  Inertia result;
  // The trailing block is carried up to a positive or negative scalar; flip
  // records a negative one.
  bool flip = false;
  while (m > 0) {
    int pivot = -1;
    for (int i = 0; i < m && pivot < 0; ++i)
      if (a[i][i] != 0) pivot = i;
    if (pivot < 0) {
      int r = -1, s = -1;
      for (int i = 0; i < m && r < 0; ++i)
        for (int j = i + 1; j < m; ++j)
          if (a[i][j] != 0) {
            r = i;
            s = j;
            break;
          }
      if (r < 0) {
        result.zero += m;
        break;
      }
      // e_r <- e_r + e_s makes the diagonal entry 2 a_rs.
      for (int k = 0; k < m; ++k) a[r][k] += a[s][k];
      for (int k = 0; k < m; ++k) a[k][r] += a[k][s];
      pivot = r;
    }
    if (pivot != 0) {
      std::swap(a[0], a[pivot]);
      for (auto& row : a) std::swap(row[0], row[pivot]);
    }
    const cpp_int p = a[0][0];
    const bool positive = (p > 0) != flip;
    (positive ? result.positive : result.negative)++;

    // Basis e_i <- p e_i - a_0i e_0 clears row 0 and scales the rest by p.
    std::vector<std::vector<cpp_int>> next(m - 1, std::vector<cpp_int>(m - 1));
    cpp_int g = 0;
    for (int i = 1; i < m; ++i)
      for (int j = 1; j < m; ++j) {
        next[i - 1][j - 1] = p * a[i][j] - a[0][i] * a[0][j];
        g = gcd(g, next[i - 1][j - 1]);
      }
    if (g > 1)
      for (auto& row : next)
        for (auto& x : row) x /= g;
    if (p < 0) flip = !flip;
    a = std::move(next);
    --m;
  }
  return result;
}

Definiteness definiteness(const SymmetricIntForm& f) {
  const Inertia in = inertia(f);
  if (in.zero > 0) return Definiteness::Degenerate;
  if (in.positive == f.dim()) return Definiteness::Positive;
  if (in.negative == f.dim()) return Definiteness::Negative;
  return Definiteness::Indefinite;
}

std::int64_t determinant(const SymmetricIntForm& f) {
  const int m = f.dim();
  if (m == 0) return 1;
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = f.at(i, j);
  cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < m; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  const cpp_int det = a[m - 1][m - 1] * sign;
  return det.convert_to<std::int64_t>();
}

}  // namespace taitkit
