#pragma once

// Todd-Coxeter coset enumeration, HLT strategy with lookahead
// compaction.
//
// The table rows are cosets, the columns are generators and their
// inverses.  Enumeration processes live cosets in order, scanning every
// relator (fixed order) and filling gaps with new definitions; each row
// is then completed in row-major order, so runs are reproducible.
// Coincidences are handled by union-find with immediate table merging.
// When the coset cap is reached a deduction-only lookahead pass runs;
// if it frees at least half the table the table is compacted and the
// sweep resumes, otherwise the result is Exhausted, which means "no
// conclusion", never "infinite".

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace cpg {

struct EnumerationResult {
  bool completed = false;
  long long index = 0;          // coset count on completion
  long long total_defined = 0;  // cosets ever defined
  long long cap = 0;
};

// Column layout: generator g -> 2g (positive), 2g+1 (inverse).
inline int coset_column(const Letter& l) {
  return 2 * l.index + (l.sign < 0 ? 1 : 0);
}
inline int coset_column_inverse(int col) { return col ^ 1; }

class CosetEnumerator {
 public:
  static constexpr std::int32_t kUndef = -1;

  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup,
                  long long max_cosets)
      : width_(2 * p.rank()), ngens_(p.rank()), cap_(max_cosets) {
    if (max_cosets < 1)
      throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
    for (const auto& r : p.relators) {
      std::vector<int> cols;
      for (const auto& l : free_reduce(r).letters) cols.push_back(coset_column(l));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    for (const auto& w : subgroup) {
      std::vector<int> cols;
      for (const auto& l : free_reduce(w).letters) cols.push_back(coset_column(l));
      if (!cols.empty()) subgroup_.push_back(std::move(cols));
    }
    new_coset();  // coset 0: the subgroup itself
  }

  EnumerationResult run() {
    for (const auto& w : subgroup_) {
      while (!exhausted_) {
        scan(0, w, true);
        if (!paused_) break;
        std::int64_t zero = 0;
        if (!recover(zero)) break;
      }
      if (exhausted_) break;
    }
    // Sweep until the table is closed; merges can transiently undefine
    // entries of already-processed rows, so re-sweep until clean.
    while (!exhausted_) {
      sweep();
      if (exhausted_ || fully_defined()) break;
    }
    EnumerationResult res;
    res.total_defined = total_defined_;
    res.cap = cap_;
    if (!exhausted_) {
      res.completed = true;
      res.index = live_count_;
    }
    return res;
  }

  long long live_count() const { return live_count_; }
  int generator_count() const { return ngens_; }

  // Compact renumbered action table: size live_count x 2*ngens.
  std::vector<std::int32_t> compact_table() const {
    std::vector<std::int64_t> remap(parent_.size(), -1);
    std::int64_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (is_live(i)) remap[i] = next++;
    std::vector<std::int32_t> out(next * width_, kUndef);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (!is_live(i)) continue;
      for (int col = 0; col < width_; ++col) {
        auto v = entry(i, col);
        out[remap[i] * width_ + col] =
            v == kUndef ? kUndef : static_cast<std::int32_t>(remap[find(v)]);
      }
    }
    return out;
  }

 private:
  void sweep() {
    std::int64_t alpha = 0;
    while (!exhausted_ && alpha < static_cast<std::int64_t>(parent_.size())) {
      if (!is_live(alpha)) {
        ++alpha;
        continue;
      }
      bool redo = false;
      for (const auto& r : relators_) {
        scan(alpha, r, true);
        if (paused_) {
          if (!recover(alpha)) break;
          redo = true;
          break;
        }
        if (!is_live(alpha)) break;
      }
      if (exhausted_ || redo) continue;
      if (!is_live(alpha)) {
        ++alpha;
        continue;
      }
      for (int col = 0; col < width_; ++col) {
        if (entry(alpha, col) != kUndef) continue;
        define(alpha, col);
        if (paused_) {
          if (!recover(alpha)) break;
          redo = true;
          break;
        }
      }
      if (exhausted_ || redo) continue;
      ++alpha;
    }
  }

  bool fully_defined() const {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!is_live(c)) continue;
      for (int col = 0; col < width_; ++col)
        if (entry(c, col) == kUndef) return false;
    }
    return true;
  }

  bool is_live(std::int64_t c) const { return parent_[c] == c; }

  std::int64_t find(std::int64_t c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  std::int32_t entry(std::int64_t coset, int col) const {
    return table_[coset * width_ + col];
  }
  void set_entry(std::int64_t coset, int col, std::int32_t v) {
    table_[coset * width_ + col] = v;
  }

  std::int64_t new_coset() {
    parent_.push_back(static_cast<std::int64_t>(parent_.size()));
    table_.resize(table_.size() + width_, kUndef);
    ++live_count_;
    ++total_defined_;
    return static_cast<std::int64_t>(parent_.size()) - 1;
  }

  // Defines table[alpha][col]; pauses instead when the cap is reached.
  void define(std::int64_t alpha, int col) {
    if (static_cast<long long>(parent_.size()) >= cap_) {
      paused_ = true;
      return;
    }
    std::int64_t beta = new_coset();
    set_entry(alpha, col, static_cast<std::int32_t>(beta));
    set_entry(beta, coset_column_inverse(col), static_cast<std::int32_t>(alpha));
  }

  void merge(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_count_;
    merge_queue_.push_back(b);
  }

  void process_coincidences() {
    while (!merge_queue_.empty()) {
      const std::int64_t gamma = merge_queue_.front();
      merge_queue_.pop_front();
      for (int col = 0; col < width_; ++col) {
        const std::int32_t delta = entry(gamma, col);
        if (delta == kUndef) continue;
        set_entry(gamma, col, kUndef);
        set_entry(delta, coset_column_inverse(col), kUndef);
        const std::int64_t mu = find(gamma);
        const std::int64_t nu = find(delta);
        if (entry(mu, col) != kUndef) {
          merge(nu, entry(mu, col));
        } else if (entry(nu, coset_column_inverse(col)) != kUndef) {
          merge(mu, entry(nu, coset_column_inverse(col)));
        } else {
          set_entry(mu, col, static_cast<std::int32_t>(nu));
          set_entry(nu, coset_column_inverse(col), static_cast<std::int32_t>(mu));
        }
      }
    }
  }

  // Scan the relator at alpha.  With fill, gaps are closed by new
  // definitions (restarting the scan); without, only deductions and
  // coincidences are applied.
  void scan(std::int64_t alpha, const std::vector<int>& word, bool fill) {
    while (true) {
      alpha = find(alpha);
      std::int64_t f = alpha;
      std::size_t i = 0;
      while (i < word.size()) {
        const std::int32_t next = entry(f, word[i]);
        if (next == kUndef) break;
        f = find(next);
        ++i;
      }
      if (i == word.size()) {
        if (f != alpha) {
          merge(f, alpha);
          process_coincidences();
        }
        return;
      }
      std::int64_t b = alpha;
      std::size_t j = word.size();
      while (j > i + 1) {
        const std::int32_t prev = entry(b, coset_column_inverse(word[j - 1]));
        if (prev == kUndef) break;
        b = find(prev);
        --j;
      }
      if (j == i + 1) {
        // deduction closes the gap
        const std::int32_t prev = entry(b, coset_column_inverse(word[j - 1]));
        if (prev != kUndef) {
          // scan closes completely; forward end must equal backward end
          if (find(prev) != f) {
            merge(find(prev), f);
            process_coincidences();
          }
          return;
        }
        set_entry(f, word[i], static_cast<std::int32_t>(b));
        set_entry(b, coset_column_inverse(word[i]), static_cast<std::int32_t>(f));
        return;
      }
      if (!fill) return;
      define(f, word[i]);
      if (paused_) return;
    }
  }

  // Lookahead after a pause: deduction-only scans, then compaction when
  // at least half the table died.  Translates the caller's current
  // coset through the renumbering.  Returns false when enumeration
  // cannot proceed (exhausted).
  bool recover(std::int64_t& alpha) {
    paused_ = false;
    // enumeration cannot conclude anything on infinite-index inputs;
    // bound the lookahead cycles so such runs exhaust instead of
    // oscillating inside the cap
    if (++recoveries_ > 64) {
      exhausted_ = true;
      return false;
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!is_live(c)) continue;
      for (const auto& r : relators_) {
        scan(c, r, false);
        if (!is_live(c)) break;
      }
    }
    // the deductions may have closed the table outright
    if (fully_defined()) {
      alpha = compact(find(alpha));
      return true;
    }
    if (2 * live_count_ > static_cast<long long>(parent_.size())) {
      exhausted_ = true;
      return false;
    }
    alpha = compact(find(alpha));
    return true;
  }

  // Renumbers live cosets 0..live-1 preserving order; returns the new
  // index of tracked.
  std::int64_t compact(std::int64_t tracked) {
    std::vector<std::int64_t> remap(parent_.size(), -1);
    std::int64_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (is_live(i)) remap[i] = next++;
    std::vector<std::int32_t> nt(next * width_, kUndef);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (!is_live(i)) continue;
      for (int col = 0; col < width_; ++col) {
        const std::int32_t v = entry(i, col);
        if (v != kUndef)
          nt[remap[i] * width_ + col] = static_cast<std::int32_t>(remap[find(v)]);
      }
    }
    table_ = std::move(nt);
    parent_.resize(next);
    for (std::int64_t i = 0; i < next; ++i) parent_[i] = i;
    return remap[tracked];
  }

  int width_;
  int ngens_;
  long long cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<std::int32_t> table_;
  std::vector<std::int64_t> parent_;
  std::deque<std::int64_t> merge_queue_;
  long long live_count_ = 0;
  long long total_defined_ = 0;
  int recoveries_ = 0;
  bool paused_ = false;
  bool exhausted_ = false;
};

struct CompletedTable {
  long long size = 0;
  int ngens = 0;
  std::vector<std::int32_t> act;  // size x 2*ngens

  std::int32_t step(std::int64_t coset, int col) const {
    return act[coset * 2 * ngens + col];
  }
  std::int64_t trace(std::int64_t coset, const Word& w) const {
    for (const auto& l : w.letters) coset = step(coset, coset_column(l));
    return coset;
  }
};

inline EnumerationResult todd_coxeter(const Presentation& p,
                                      const std::vector<Word>& subgroup,
                                      long long max_cosets,
                                      CompletedTable* table_out = nullptr) {
  CosetEnumerator e(p, subgroup, max_cosets);
  EnumerationResult res = e.run();
  if (res.completed && table_out) {
    table_out->size = res.index;
    table_out->ngens = e.generator_count();
    table_out->act = e.compact_table();
  }
  return res;
}

// Full verification sweep: every relator closes at every coset, every
// subgroup generator closes at coset 0, and the action is a permutation
// in every column.
inline bool verify_table(const CompletedTable& t, const Presentation& p,
                         const std::vector<Word>& subgroup) {
  for (int col = 0; col < 2 * t.ngens; ++col) {
    std::vector<char> hit(t.size, 0);
    for (std::int64_t c = 0; c < t.size; ++c) {
      auto v = t.step(c, col);
      if (v < 0 || v >= t.size || hit[v]) return false;
      hit[v] = 1;
      if (t.step(v, coset_column_inverse(col)) != c) return false;
    }
  }
  for (std::int64_t c = 0; c < t.size; ++c)
    for (const auto& r : p.relators)
      if (t.trace(c, r) != c) return false;
  for (const auto& w : subgroup)
    if (t.trace(0, w) != 0) return false;
  return true;
}

}  // namespace cpg
