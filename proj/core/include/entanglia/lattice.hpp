#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace entanglia {

// Set partition of {0..n-1}.  Canonical: blocks sorted, ordered by least element.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  Partition() = default;
  Partition(int n, std::vector<std::vector<int>> blocks);
  int size() const { return static_cast<int>(blocks.size()); }
  std::string str() const;  // "1|23"
  static Partition parse(const std::string& s);
  static Partition finest(int n);
  static Partition top(int n);
  bool operator==(const Partition& o) const { return n == o.n && blocks == o.blocks; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
};

// Fixed total order: more blocks first, then lexicographic on blocks.
bool partition_less(const Partition& a, const Partition& b);
std::vector<Partition> enumerate_partitions(int n);
// Partitions with exactly k blocks.
std::vector<Partition> k_partitions(int n, int k);
// beta refines alpha: every block of beta sits inside a block of alpha.
bool refines(const Partition& beta, const Partition& alpha);

using Label = std::vector<Partition>;

std::string label_str(const Label& l);  // "1|23,2|13"
Label parse_label(const std::string& s);
bool label_leq(const Label& beta, const Label& alpha);
bool is_proper(const Label& l);
// Drops dominated partitions and sorts into canonical order.
Label reduce_label(const Label& l);
std::vector<Label> proper_labels(int n);

struct ClassLabel {
  std::vector<int> above;  // indices into the proper-label list
  std::vector<int> below;
};

// Up-set test for a subset of proper labels given as a membership mask.
bool not_empty_by_construction(const std::vector<Label>& labels, const std::vector<bool>& below);

// Streams every class label not empty by construction.  Unless include_trivial
// is set, the one with nothing below is skipped (it requires leaving the full
// state space).  Return false from the callback to stop early.
void for_each_class_label(int n, const std::function<bool(const ClassLabel&)>& cb,
                          bool include_trivial = false);
std::vector<ClassLabel> class_labels(int n, bool include_trivial = false);

struct LatticeEdge {
  int lower, upper;
};
// Cover relation of label_leq restricted to proper labels.
std::vector<LatticeEdge> label_cover_edges(const std::vector<Label>& labels);

}  // namespace entanglia
