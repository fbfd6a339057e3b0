#include "skmono/toddcox.hpp"

#include <deque>
#include <numeric>

#include "skmono/errors.hpp"

namespace skmono {

GroupWord word_from_st(const STWord& w, bool projective) {
  GroupWord out;
  out.reserve(w.letters.size() + 2);
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::S: out.push_back(0); break;
      case Letter::T: out.push_back(2); break;
      case Letter::Tinv: out.push_back(3); break;
    }
  }
  if (!projective && w.sign < 0) {
    out.push_back(0);
    out.push_back(0);
  }
  return out;
}

namespace {

constexpr int kUndef = -1;

class Enumerator {
 public:
  Enumerator(std::vector<GroupWord> relators, int cap)
      : relators_(std::move(relators)), cap_(cap) {
    new_coset();
  }

  void run(const std::vector<GroupWord>& subgroup_gens) {
    for (const GroupWord& w : subgroup_gens) {
      if (!w.empty()) scan_and_fill(0, w);
    }
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (!alive(alpha)) continue;
      for (const GroupWord& r : relators_) {
        scan_and_fill(static_cast<int>(alpha), r);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (int l = 0; l < 4; ++l) {
        if (entry(static_cast<int>(alpha), l) == kUndef)
          define(static_cast<int>(alpha), l);
      }
    }
  }

  ToddCoxeterTable compress(bool projective) const {
    std::vector<int> remap(table_.size(), -1);
    int live = 0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (parent_[i] == static_cast<int>(i)) remap[i] = live++;
    }
    ToddCoxeterTable out;
    out.projective = projective;
    out.rows.resize(live);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (remap[i] < 0) continue;
      for (int l = 0; l < 4; ++l) {
        int img = table_[i][l];
        out.rows[remap[i]][l] = img == kUndef ? kUndef : remap[find(img)];
      }
    }
    return out;
  }

 private:
  bool alive(std::size_t i) { return find(static_cast<int>(i)) == static_cast<int>(i); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  int entry(int a, int l) const {
    int e = table_[a][l];
    return e == kUndef ? kUndef : find(e);
  }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= cap_)
      throw CapExceeded("coset cap exceeded (" + std::to_string(cap_) + ")");
    table_.push_back({kUndef, kUndef, kUndef, kUndef});
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return parent_.back();
  }

  int define(int a, int l) {
    int n = new_coset();
    table_[a][l] = n;
    table_[n][inverse_letter(l)] = a;
    return n;
  }

  // table[a][l] := b (and the inverse direction), merging on conflicts
  void set_entry(int a, int l, int b) {
    int cur = entry(a, l);
    if (cur != kUndef && cur != b) {
      coincidence(cur, b);
      return;
    }
    table_[a][l] = b;
    int back = entry(b, inverse_letter(l));
    if (back == kUndef)
      table_[b][inverse_letter(l)] = a;
    else if (back != a)
      coincidence(back, a);
  }

  void scan_and_fill(int alpha, const GroupWord& w) {
    int f = find(alpha);
    int b = f;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) != kUndef) {
        f = entry(f, w[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_letter(w[j])) != kUndef) {
        b = entry(b, inverse_letter(w[j]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set_entry(f, w[i], b);
        return;
      }
      f = find(f);
      define(f, w[i]);
    }
  }

  void coincidence(int x, int y) {
    std::deque<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop_front();
      p = find(p);
      q = find(q);
      if (p == q) continue;
      if (q < p) std::swap(p, q);
      parent_[q] = p;  // q dies
      for (int l = 0; l < 4; ++l) {
        int img = table_[q][l];
        if (img == kUndef) continue;
        img = find(img);
        int mine = entry(p, l);
        if (mine == kUndef) {
          table_[p][l] = img;
          int back = entry(img, inverse_letter(l));
          if (back == kUndef)
            table_[img][inverse_letter(l)] = p;
          else if (back != p)
            queue.emplace_back(back, p);
        } else if (mine != img) {
          queue.emplace_back(mine, img);
        }
        table_[q][l] = kUndef;
      }
    }
  }

  std::vector<GroupWord> relators_;
  int cap_;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
};

std::vector<GroupWord> relators_for(bool projective) {
  if (projective) return {{0, 0}, {0, 2, 0, 2, 0, 2}};
  // s^4 and (st)^3 s^-2
  return {{0, 0, 0, 0}, {0, 2, 0, 2, 0, 2, 1, 1}};
}

}  // namespace

ToddCoxeterTable todd_coxeter(const std::vector<GroupWord>& subgroup_gens,
                              bool projective, int cap) {
  Enumerator e(relators_for(projective), cap);
  e.run(subgroup_gens);
  return e.compress(projective);
}

int ToddCoxeterTable::trace(int start, const GroupWord& w) const {
  int c = start;
  for (int l : w) {
    c = rows[c][l];
    if (c < 0) return -1;
  }
  return c;
}

bool ToddCoxeterTable::contains(const IntMat2& m) const {
  return trace(0, word_from_st(st_word(m), projective)) == 0;
}

int index_of_generated(const std::vector<IntMat2>& gens, int cap,
                       bool projective) {
  std::vector<GroupWord> words;
  words.reserve(gens.size());
  for (const IntMat2& g : gens)
    words.push_back(word_from_st(st_word(g), projective));
  return todd_coxeter(words, projective, cap).index();
}

}  // namespace skmono
