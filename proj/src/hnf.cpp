#include "skmono/hnf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace skmono {

namespace {

// g = a*x + b*y with g = gcd(a,b) >= 0
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  g = old_r;
  x = old_x;
  y = old_y;
}

}  // namespace

HnfResult column_hnf(const IntMat2& b) {
  Int d = det(b);
  if (d <= 0) throw NonPositiveDeterminant("column_hnf: det <= 0");
  // Kill the bottom-left entry with a det-1 column operation built from
  // the extended gcd of the bottom row.
  Int g, x, y;
  xgcd(b.c, b.d, g, x, y);
  IntMat2 u0{b.d / g, x, -b.c / g, y};  // det = (d*y + c*x)/g = 1
  IntMat2 h = b * u0;
  // h = [[alpha, beta],[0, g]], alpha = det/g > 0
  Int q = floor_div(h.b, h.a);
  IntMat2 u = u0 * t_power(-q);
  h = h * t_power(-q);
  return {h, u};
}

std::vector<IntMat2> hnf_representatives(const Int& m) {
  std::vector<IntMat2> out;
  for (Int alpha = 1; alpha <= m; ++alpha) {
    if (m % alpha != 0) continue;
    Int delta = m / alpha;
    for (Int beta = 0; beta < alpha; ++beta)
      out.push_back({alpha, beta, 0, delta});
  }
  return out;
}

std::vector<IntMat2> primitive_hnf_representatives(const Int& m) {
  std::vector<IntMat2> out;
  for (const IntMat2& h : hnf_representatives(m)) {
    if (content(h) == 1) out.push_back(h);
  }
  return out;
}

bool Lattice4::insert(const Vec& v_in) {
  Vec v = v_in;
  bool changed = false;
  while (true) {
    int pivot = -1;
    for (int i = 0; i < 4; ++i) {
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) break;  // reduced to zero
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Vec& r) {
      for (int i = 0; i < 4; ++i) {
        if (r[i] != 0) return i >= pivot;
      }
      return true;
    });
    int row_pivot = -1;
    if (it != rows_.end()) {
      for (int i = 0; i < 4; ++i) {
        if ((*it)[i] != 0) {
          row_pivot = i;
          break;
        }
      }
    }
    if (it == rows_.end() || row_pivot != pivot) {
      if (v[pivot] < 0)
        for (auto& e : v) e = -e;
      rows_.insert(it, v);
      changed = true;
      break;
    }
    Vec& r = *it;
    if (v[pivot] % r[pivot] == 0) {
      Int q = v[pivot] / r[pivot];
      for (int i = 0; i < 4; ++i) v[i] -= q * r[i];
    } else {
      Int g, x, y;
      xgcd(r[pivot], v[pivot], g, x, y);
      Vec combined, residual;
      Int rq = r[pivot] / g, vq = v[pivot] / g;
      for (int i = 0; i < 4; ++i) {
        combined[i] = x * r[i] + y * v[i];
        residual[i] = rq * v[i] - vq * r[i];
      }
      r = combined;
      v = residual;
      changed = true;
    }
  }
  if (changed) renormalize();
  return changed;
}

void Lattice4::renormalize() {
  for (auto& r : rows_) {
    int p = -1;
    for (int i = 0; i < 4; ++i) {
      if (r[i] != 0) {
        p = i;
        break;
      }
    }
    if (p >= 0 && r[p] < 0)
      for (auto& e : r) e = -e;
  }
  std::sort(rows_.begin(), rows_.end(), [](const Vec& a, const Vec& b) {
    int pa = 4, pb = 4;
    for (int i = 0; i < 4; ++i) {
      if (pa == 4 && a[i] != 0) pa = i;
      if (pb == 4 && b[i] != 0) pb = i;
    }
    return pa < pb;
  });
  // reduce entries above each pivot
  for (std::size_t i = rows_.size(); i-- > 0;) {
    int p = -1;
    for (int k = 0; k < 4; ++k) {
      if (rows_[i][k] != 0) {
        p = k;
        break;
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(rows_[j][p], rows_[i][p]);
      if (q != 0)
        for (int k = 0; k < 4; ++k) rows_[j][k] -= q * rows_[i][k];
    }
  }
}

bool Lattice4::contains(const Vec& v_in) const {
  Vec v = v_in;
  for (const Vec& r : rows_) {
    int p = -1;
    for (int i = 0; i < 4; ++i) {
      if (r[i] != 0) {
        p = i;
        break;
      }
    }
    if (v[p] == 0) continue;
    if (v[p] % r[p] != 0) return false;
    Int q = v[p] / r[p];
    for (int i = 0; i < 4; ++i) v[i] -= q * r[i];
  }
  return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
}

namespace {

// Smith normal form largest divisor of a 4x4 full-rank integer matrix.
Int snf_largest_divisor(std::array<std::array<Int, 4>, 4> m) {
  Int last = 1;
  for (int k = 0; k < 4; ++k) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = k; i < 4; ++i) {
        for (int j = k; j < 4; ++j) {
          if (m[i][j] != 0 &&
              (bi < 0 || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) throw RankDeficient("smith: rank < 4");
      std::swap(m[k], m[bi]);
      for (int i = 0; i < 4; ++i) std::swap(m[i][k], m[i][bj]);
      bool done = true;
      for (int i = k + 1; i < 4; ++i) {
        Int q = m[i][k] / m[k][k];
        if (q != 0)
          for (int j = k; j < 4; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) done = false;
      }
      for (int j = k + 1; j < 4; ++j) {
        Int q = m[k][j] / m[k][k];
        if (q != 0)
          for (int i = k; i < 4; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) done = false;
      }
      if (!done) continue;
      Int piv = abs(m[k][k]);
      bool fixed = true;
      for (int i = k + 1; i < 4 && fixed; ++i) {
        for (int j = k + 1; j < 4 && fixed; ++j) {
          if (m[i][j] % piv != 0) {
            for (int t = k; t < 4; ++t) m[k][t] += m[i][t];
            fixed = false;
          }
        }
      }
      if (fixed) {
        last = piv;
        break;
      }
    }
  }
  return last;
}

}  // namespace

Int lattice_exponent(const Lattice4& lat) {
  if (lat.rank() != 4) throw RankDeficient("lattice_exponent: rank < 4");
  std::array<std::array<Int, 4>, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = lat.basis()[i];
  return snf_largest_divisor(m);
}

Int smith_exponent(const std::vector<IntMat2>& span) {
  Lattice4 lat;
  for (const IntMat2& g : span) lat.insert(g);
  return lattice_exponent(lat);
}

}  // namespace skmono
