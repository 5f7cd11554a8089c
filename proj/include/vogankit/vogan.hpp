#ifndef VOGANKIT_VOGAN_HPP
#define VOGANKIT_VOGAN_HPP

#include <set>
#include <string>
#include <vector>

#include "vogankit/diagram.hpp"

namespace vgk {

/// Order <= 2 structure-preserving vertex permutation.
struct Involution {
  std::vector<int> perm;

  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != int(i)) return false;
    return true;
  }
  std::vector<int> fixed_points() const;
  std::vector<std::pair<int, int>> two_orbits() const;

  friend bool operator==(const Involution& a, const Involution& b) { return a.perm == b.perm; }
  friend bool operator<(const Involution& a, const Involution& b) { return a.perm < b.perm; }
};

/// Checks perm o perm = id and preservation of parity, color, mark and gram.
void validate_involution(const DynkinDiagram& d, const Involution& inv);

/// All structure-preserving permutations (the full diagram automorphism
/// group), deterministic order.
std::vector<std::vector<int>> automorphisms_full(const DynkinDiagram& d);

/// The order <= 2 elements of the automorphism group, identity included.
std::vector<Involution> automorphisms(const DynkinDiagram& d);

struct SItem {
  enum class Kind { painted_vertex, orbit } kind;
  int a = 0, b = -1;  // orbit members (b unused for painted vertices)
  long label_sum = 0;

  friend bool operator<(const SItem& x, const SItem& y) {
    return std::tie(x.kind, x.a, x.b) < std::tie(y.kind, y.a, y.b);
  }
  friend bool operator==(const SItem& x, const SItem& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }
};

/// S = painted vertices + white adjacent 2-orbits + grey non-adjacent
/// 2-orbits.  Throws painting_error if a painted vertex is moved by d.
std::vector<SItem> s_set(const DynkinDiagram& diagram, const std::set<int>& painted,
                         const Involution& d);

struct VoganVerdict {
  bool valid = false;
  bool grey_fixed = false;   // branch (i)
  bool odd_sum = false;      // branch (ii)
  long s_sum = 0;
  std::vector<SItem> s_items;
  std::string branch() const { return grey_fixed ? "grey-fixed" : odd_sum ? "odd-sum" : "none"; }
};

VoganVerdict is_vogan(const DynkinDiagram& diagram, const std::set<int>& painted,
                      const Involution& d);

struct VoganDiagram {
  DynkinDiagram diagram;
  Involution d;
  std::set<int> painted;
  VoganVerdict verdict;

  bool paints_grey() const;
};

/// Lexicographic encoding of (painted, d) used for canonical representatives.
std::vector<int> encode_cd(std::size_t nverts, const std::set<int>& painted, const Involution& d);

/// Conjugate (c,d) by a diagram automorphism sigma:
/// painted -> sigma(painted), d -> sigma d sigma^-1.
std::pair<std::set<int>, Involution> conjugate_cd(const std::set<int>& painted,
                                                  const Involution& d,
                                                  const std::vector<int>& sigma);

/// All valid (painted, d) pairs on the diagram, deterministic order.
/// With up_to_equivalence, one representative per automorphism-conjugacy
/// orbit (lexicographically least encoding).
std::vector<VoganDiagram> enumerate_vogan(const DynkinDiagram& diagram, bool up_to_equivalence);

}  // namespace vgk

#endif
