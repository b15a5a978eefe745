#include "mdsgrs/linalg.hpp"

#include <utility>

namespace mdsgrs {

namespace {

std::size_t eliminate(const Field& f, std::vector<std::vector<Elem>>& m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Elem inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Elem factor = m[i][c];
      if (factor.is_zero()) continue;
      const Elem neg = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.add(m[i][j], f.mul(neg, m[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const GeneratorMatrix& g) {
  if (g.rows() == 0 || g.cols() == 0) return 0;
  std::vector<std::vector<Elem>> m(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) m[i].assign(g.row(i).begin(), g.row(i).end());
  return eliminate(g.field(), m, g.cols());
}

bool columns_nonsingular(const GeneratorMatrix& g, std::span<const std::size_t> columns) {
  if (columns.size() != g.rows()) return false;
  std::vector<std::vector<Elem>> m(g.rows(), std::vector<Elem>(columns.size()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) m[i][j] = g.at(i, columns[j]);
  }
  return eliminate(g.field(), m, columns.size()) == columns.size();
}

GeneratorMatrix gram(const GeneratorMatrix& g) {
  const Field& f = g.field();
  GeneratorMatrix out(g.field_ptr(), g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t l = i; l < g.rows(); ++l) {
      Elem acc = f.zero();
      const auto a = g.row(i);
      const auto b = g.row(l);
      for (std::size_t j = 0; j < g.cols(); ++j) acc = f.add(acc, f.mul(a[j], b[j]));
      out.at(i, l) = acc;
      out.at(l, i) = acc;
    }
  }
  return out;
}

}  // namespace mdsgrs
