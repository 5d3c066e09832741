#include "enumcc/editdist.hpp"

#include <algorithm>
#include <limits>

#include "enumcc/errors.hpp"

namespace enumcc {

namespace {

int label_count(std::span<const int> labels) {
  int top = -1;
  for (int l : labels) {
    if (l < 0) throw InputError("negative module label");
    top = std::max(top, l);
  }
  return top + 1;
}

std::vector<int> transpose(const std::vector<int>& w, int rows, int cols) {
  std::vector<int> t(w.size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t[static_cast<std::size_t>(j) * rows + i] = w[static_cast<std::size_t>(i) * cols + j];
  return t;
}

int assignment_value(const std::vector<int>& w, int cols, const std::vector<int>& cols_of_rows) {
  int total = 0;
  for (std::size_t i = 0; i < cols_of_rows.size(); ++i) total += w[i * cols + cols_of_rows[i]];
  return total;
}

// Lexicographically smallest optimal assignment for rows <= cols.
std::vector<int> lexmin_assignment(const std::vector<int>& w, int rows, int cols) {
  int best = assignment_value(w, cols, max_weight_assignment(w, rows, cols));
  std::vector<int> chosen;
  std::vector<char> used(cols, 0);
  int fixed_sum = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (used[j]) continue;
      // Solve the remaining rows over the remaining columns.
      std::vector<int> free_cols;
      for (int c = 0; c < cols; ++c)
        if (!used[c] && c != j) free_cols.push_back(c);
      int rest_rows = rows - i - 1;
      int rest = 0;
      if (rest_rows > 0) {
        int rc = static_cast<int>(free_cols.size());
        std::vector<int> sub(static_cast<std::size_t>(rest_rows) * rc);
        for (int a = 0; a < rest_rows; ++a)
          for (int b = 0; b < rc; ++b)
            sub[static_cast<std::size_t>(a) * rc + b] = w[static_cast<std::size_t>(i + 1 + a) * cols + free_cols[b]];
        rest = assignment_value(sub, rc, max_weight_assignment(sub, rest_rows, rc));
      }
      int here = w[static_cast<std::size_t>(i) * cols + j];
      if (fixed_sum + here + rest == best) {
        chosen.push_back(j);
        used[j] = 1;
        fixed_sum += here;
        break;
      }
    }
  }
  return chosen;
}

}  // namespace

ConfusionMatrix confusion(std::span<const int> ps, std::span<const int> pt) {
  if (ps.size() != pt.size()) throw InputError("membership vectors differ in length");
  ConfusionMatrix cm;
  cm.rows = label_count(ps);
  cm.cols = label_count(pt);
  cm.cells.assign(static_cast<std::size_t>(cm.rows) * cm.cols, 0);
  for (std::size_t u = 0; u < ps.size(); ++u) cm.cells[static_cast<std::size_t>(ps[u]) * cm.cols + pt[u]]++;
  return cm;
}

std::vector<int> max_weight_assignment(const std::vector<int>& weights, int rows, int cols) {
  if (rows > cols) throw InputError("assignment needs rows <= cols");
  if (rows == 0) return {};
  // Shortest augmenting path Hungarian method on costs -w, 1-based potentials.
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<int> p(cols + 1, 0), way(cols + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(cols + 1, inf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      long long delta = inf;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        long long cur = -static_cast<long long>(weights[static_cast<std::size_t>(i0 - 1) * cols + (j - 1)]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> col_of_row(rows, -1);
  for (int j = 1; j <= cols; ++j)
    if (p[j]) col_of_row[p[j] - 1] = j - 1;
  return col_of_row;
}

int alignment_score(std::span<const int> ps, std::span<const int> pt) {
  ConfusionMatrix cm = confusion(ps, pt);
  if (cm.rows <= cm.cols)
    return assignment_value(cm.cells, cm.cols, max_weight_assignment(cm.cells, cm.rows, cm.cols));
  auto t = transpose(cm.cells, cm.rows, cm.cols);
  return assignment_value(t, cm.rows, max_weight_assignment(t, cm.cols, cm.rows));
}

Alignment align(const Membership& ps, const Membership& pt) {
  ConfusionMatrix cm = confusion(ps, pt);
  Alignment a;
  a.map.assign(cm.rows, -1);
  if (cm.rows <= cm.cols) {
    auto f = lexmin_assignment(cm.cells, cm.rows, cm.cols);
    for (int i = 0; i < cm.rows; ++i) a.map[i] = f[i];
  } else {
    auto t = transpose(cm.cells, cm.rows, cm.cols);
    auto g = lexmin_assignment(t, cm.cols, cm.rows);
    for (int j = 0; j < cm.cols; ++j) a.map[g[j]] = j;
  }
  for (int i = 0; i < cm.rows; ++i)
    if (a.map[i] >= 0) a.score += cm.at(i, a.map[i]);
  return a;
}

std::vector<int> aligned_target(const Membership& ps, const Membership& pt, const Alignment& a) {
  std::vector<int> rename(pt.num_modules(), -1);
  for (std::size_t i = 0; i < a.map.size(); ++i)
    if (a.map[i] >= 0) rename[a.map[i]] = static_cast<int>(i);
  int next = ps.num_modules();
  for (int& r : rename)
    if (r < 0) r = next++;
  std::vector<int> out(pt.size());
  for (int u = 0; u < pt.size(); ++u) out[u] = rename[pt[u]];
  return out;
}

int edit_distance(std::span<const int> ps, std::span<const int> pt) {
  return static_cast<int>(ps.size()) - alignment_score(ps, pt);
}

VertexSet moving_set(std::span<const int> ps, std::span<const int> pt_aligned) {
  if (ps.size() != pt_aligned.size()) throw InputError("membership vectors differ in length");
  VertexSet out;
  for (std::size_t u = 0; u < ps.size(); ++u)
    if (ps[u] != pt_aligned[u]) out.push_back(static_cast<Vertex>(u));
  return out;
}

}  // namespace enumcc
