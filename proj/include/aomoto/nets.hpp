#pragma once

#include <array>

#include "aomoto/osalgebra.hpp"

namespace aomoto {

/// Partition of the projective members into classes of line names.
struct NetPartition {
  std::vector<std::vector<int>> classes;  // each ascending; ordered by front

  size_t k() const { return classes.size(); }
  size_t d() const { return classes.empty() ? 0 : classes[0].size(); }
  void normalize();
  bool operator==(const NetPartition&) const = default;
  bool operator<(const NetPartition& o) const { return classes < o.classes; }
};

/// `classes 1,2|3,4|5,6` with optional H prefixes on the names.
NetPartition parse_partition(const std::string& text, const Arrangement& arr);

struct MultinetReport {
  bool ok = true;
  bool is_net = false;            // one line per class at every base point
  std::vector<size_t> base_locus;  // indices into intersection_poset(true)
  std::vector<std::string> violations;
};

/// Checks the (k,d)-multinet conditions with the base locus taken to be the
/// points meeting every class: k >= 3 classes of equal size d >= 2 (i),
/// cross-class intersections confined to the base locus (ii), per-class
/// counts equal at each base point (iii), classes connected through non-base
/// points (iv).  Throws NotAPartition when the classes do not partition the
/// members.
MultinetReport verify_multinet(const Arrangement& arr, const NetPartition& n);

/// 3-nets of the projective arrangement, one per orbit {w, 2w} of nonzero
/// H^1 classes of the diagonal form over F_3, with classes grouped by
/// coefficient value.  Requires 3 | member count and no point of multiplicity
/// 3r with r > 1.
std::vector<NetPartition> extract_3nets(const Arrangement& arr);

/// S_12, S_13, S_14 = class 1 united with class j for a 4-class partition.
/// Each must pass mod2_subset_check and the three sum to the full member set
/// (else NotACocycle).  With `require_verified` (the default) the partition
/// must first pass verify_multinet as a net.
std::array<std::set<int>, 3> fournet_cocycles(const Arrangement& arr,
                                              const NetPartition& n,
                                              bool require_verified = true);

enum class LocalCase { Empty, Full, Adjacent, Separated };

struct NonSepEntry {
  size_t point = 0;           // index into intersection_poset(true)
  LocalCase kind = LocalCase::Empty;
  std::vector<int> order;     // members in cyclic order at the point
  std::vector<int> selected;  // subset members at the point
};

struct NonSepReport {
  std::vector<NonSepEntry> entries;  // every multiplicity-4 point
  bool violation = false;
};

/// Classifies every multiplicity-4 projective point by the cyclic positions
/// of the subset members (subset must pass mod2_subset_check, else
/// NotACocycle).  A Separated entry is flagged as a violation of the
/// non-separation theorem unless the arrangement is a single pencil, the one
/// degenerate case where the theorem's band argument is vacuous.
NonSepReport non_separation_check(const Arrangement& arr,
                                  const std::set<int>& subset);

/// Exhaustive backtracking search for k-multinet partitions, k in {3, 4},
/// up to class relabeling.  Lines meeting at a point of multiplicity not
/// divisible by k are forced into one class, which prunes most of the tree.
std::vector<NetPartition> search_nets(const Arrangement& arr, int k);

struct Refutation {
  std::string reason;
  std::vector<std::string> violations;   // multinet violations, if any
  std::vector<int> class_order;          // class of each line in cyclic order
  std::set<int> subset;                  // classes 1 and 3 after reordering
  std::optional<size_t> witness_point;   // separated pair location
};

/// Contradiction certificate for a claimed 4-net partition.  Prefers the
/// geometric certificate: at a quadruple point meeting all four classes,
/// relabel classes by cyclic position and unite classes 1 and 3; the pair is
/// separated there, so the subset either fails the mod-2 cocycle conditions
/// or realizes the impossible separated case.  Falls back to the violated
/// multinet condition.
Refutation refute_4net(const Arrangement& arr, const NetPartition& n);

}  // namespace aomoto
