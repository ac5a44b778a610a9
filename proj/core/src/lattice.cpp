#include "entanglia/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace entanglia {

namespace {
void check_n(int n, int hi) {
  if (n < 1 || n > hi) throw std::invalid_argument("n out of range");
}

void canonicalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) { return x.front() < y.front(); });
}

// restricted growth strings
void rgs(int n, int i, std::vector<int>& a, int maxv, std::vector<Partition>& out) {
  if (i == n) {
    std::vector<std::vector<int>> blocks(maxv + 1);
    for (int j = 0; j < n; ++j) blocks[a[j]].push_back(j);
    out.emplace_back(n, blocks);
    return;
  }
  for (int v = 0; v <= maxv + 1; ++v) {
    a[i] = v;
    rgs(n, i + 1, a, std::max(maxv, v), out);
  }
}
}  // namespace

Partition::Partition(int n_, std::vector<std::vector<int>> b) : n(n_), blocks(std::move(b)) {
  std::vector<int> seen(n, 0);
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty block");
    for (int x : blk) {
      if (x < 0 || x >= n || seen[x]++) throw std::invalid_argument("blocks must partition 0..n-1");
    }
  }
  for (int s : seen)
    if (!s) throw std::invalid_argument("blocks must cover 0..n-1");
  canonicalize(blocks);
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '|';
    for (int x : blocks[i]) s += std::to_string(x + 1);
  }
  return s;
}

Partition Partition::parse(const std::string& s) {
  std::vector<std::vector<int>> blocks(1);
  int n = 0;
  for (char c : s) {
    if (c == '|') {
      blocks.emplace_back();
    } else if (c >= '1' && c <= '9') {
      blocks.back().push_back(c - '1');
      n = std::max(n, c - '0');
    } else if (c != ' ') {
      throw std::invalid_argument("bad partition string: " + s);
    }
  }
  return Partition(n, blocks);
}

Partition Partition::finest(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 0; i < n; ++i) b.push_back({i});
  return Partition(n, b);
}

Partition Partition::top(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {all});
}

bool partition_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.blocks < b.blocks;
}

std::vector<Partition> enumerate_partitions(int n) {
  check_n(n, 6);
  std::vector<Partition> out;
  std::vector<int> a(n, 0);
  rgs(n, 1, a, 0, out);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

std::vector<Partition> k_partitions(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.size() == k) out.push_back(p);
  return out;
}

bool refines(const Partition& beta, const Partition& alpha) {
  if (beta.n != alpha.n) throw std::invalid_argument("partitions of different sets");
  std::vector<int> owner(alpha.n);
  for (size_t i = 0; i < alpha.blocks.size(); ++i)
    for (int x : alpha.blocks[i]) owner[x] = static_cast<int>(i);
  for (auto& b : beta.blocks)
    for (int x : b)
      if (owner[x] != owner[b.front()]) return false;
  return true;
}

std::string label_str(const Label& l) {
  std::string s;
  for (size_t i = 0; i < l.size(); ++i) {
    if (i) s += ',';
    s += l[i].str();
  }
  return s;
}

Label parse_label(const std::string& s) {
  Label l;
  std::stringstream ss(s);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ',')) {
    l.push_back(Partition::parse(part));
    n = std::max(n, l.back().n);
  }
  if (l.empty()) throw std::invalid_argument("empty label");
  // a partition string names only the elements it mentions; widen to n
  for (auto& p : l)
    if (p.n != n) throw std::invalid_argument("label parts over different sets: " + s);
  std::sort(l.begin(), l.end(), partition_less);
  return l;
}

bool label_leq(const Label& beta, const Label& alpha) {
  for (auto& b : beta) {
    bool ok = false;
    for (auto& a : alpha)
      if (refines(b, a)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_proper(const Label& l) {
  for (size_t i = 0; i < l.size(); ++i)
    for (size_t j = 0; j < l.size(); ++j)
      if (i != j && refines(l[i], l[j])) return false;
  return !l.empty();
}

Label reduce_label(const Label& l) {
  Label out;
  for (size_t i = 0; i < l.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < l.size() && !dominated; ++j) {
      if (i == j || !refines(l[i], l[j])) continue;
      // strictly below another part, or an earlier duplicate
      dominated = l[i] != l[j] || j < i;
    }
    if (!dominated) out.push_back(l[i]);
  }
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

namespace {
void extend(const std::vector<Partition>& parts, Label& cur, size_t from, std::vector<Label>& out) {
  for (size_t i = from; i < parts.size(); ++i) {
    bool ok = true;
    for (auto& p : cur)
      if (refines(p, parts[i]) || refines(parts[i], p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(parts[i]);
    out.push_back(cur);
    extend(parts, cur, i + 1, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Label> proper_labels(int n) {
  check_n(n, 4);
  auto parts = enumerate_partitions(n);
  std::vector<Label> out;
  Label cur;
  extend(parts, cur, 0, out);
  return out;
}

bool not_empty_by_construction(const std::vector<Label>& labels, const std::vector<bool>& below) {
  for (size_t b = 0; b < labels.size(); ++b) {
    if (!below[b]) continue;
    for (size_t a = 0; a < labels.size(); ++a)
      if (!below[a] && label_leq(labels[b], labels[a])) return false;
  }
  return true;
}

void for_each_class_label(int n, const std::function<bool(const ClassLabel&)>& cb,
                          bool include_trivial) {
  auto labels = proper_labels(n);
  const int P = static_cast<int>(labels.size());
  // Visit labels from the top down so that every label strictly above the
  // current one is already decided.
  std::vector<int> order(P);
  std::vector<int> height(P, 0);
  for (int i = 0; i < P; ++i) {
    order[i] = i;
    for (int j = 0; j < P; ++j)
      if (i != j && label_leq(labels[i], labels[j])) ++height[i];
  }
  // height = number of labels above; fewer above means closer to the top
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return height[a] < height[b]; });
  std::vector<std::vector<int>> ups(P);
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j)
      if (i != j && label_leq(labels[i], labels[j])) ups[i].push_back(j);

  std::vector<int> state(P, -1);  // 1 below, 0 above
  bool stop = false;
  std::function<void(int)> rec = [&](int pos) {
    if (stop) return;
    if (pos == P) {
      ClassLabel c;
      for (int i = 0; i < P; ++i) (state[i] ? c.below : c.above).push_back(i);
      if (!include_trivial && c.below.empty()) return;
      if (!cb(c)) stop = true;
      return;
    }
    int i = order[pos];
    state[i] = 0;
    rec(pos + 1);
    bool can_below = true;
    for (int j : ups[i])
      if (state[j] != 1) {
        can_below = false;
        break;
      }
    if (can_below) {
      state[i] = 1;
      rec(pos + 1);
    }
    state[i] = -1;
  };
  rec(0);
}

std::vector<ClassLabel> class_labels(int n, bool include_trivial) {
  if (n > 3) throw std::invalid_argument("materialized class labels only for n <= 3; stream instead");
  std::vector<ClassLabel> out;
  for_each_class_label(n, [&](const ClassLabel& c) {
    out.push_back(c);
    return true;
  }, include_trivial);
  return out;
}

std::vector<LatticeEdge> label_cover_edges(const std::vector<Label>& labels) {
  const int P = static_cast<int>(labels.size());
  auto lt = [&](int a, int b) { return a != b && label_leq(labels[a], labels[b]); };
  std::vector<LatticeEdge> e;
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < P && cover; ++c)
        if (lt(a, c) && lt(c, b)) cover = false;
      if (cover) e.push_back({a, b});
    }
  return e;
}

}  // namespace entanglia
