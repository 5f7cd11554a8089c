#ifndef VOGANKIT_DIAGRAM_HPP
#define VOGANKIT_DIAGRAM_HPP

#include <optional>
#include <vector>

#include "vogankit/family.hpp"
#include "vogankit/linalg.hpp"
#include "vogankit/weight.hpp"

namespace vgk {

enum class Color { white, grey, black };

std::string color_name(Color c);
std::string parity_name(Parity p);

struct Vertex {
  int index = 0;
  Parity parity = Parity::even;
  Color color = Color::white;
  long mark = 1;
};

/// Dynkin diagram with exact Gram matrix as the single source of truth for
/// edges: i ~ j iff gram[i][j] != 0.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;

  /// Direct construction from parts (used for synthetic diagrams and
  /// deserialization).  Checks symmetry and the color/parity/diagonal rules
  /// but not the affine mark property.
  DynkinDiagram(std::vector<Vertex> vertices, RatMatrix gram,
                std::optional<FamilySpec> family = std::nullopt);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const RatMatrix& gram() const { return gram_; }
  const std::optional<FamilySpec>& family_tag() const { return family_; }
  void set_family_tag(FamilySpec s) { family_ = s; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && gram_[i][j] != 0;
  }

  std::vector<long> marks() const;

  /// Recompute the minimal positive integer null vector from gram; must agree
  /// with the stored marks on affine diagrams.
  std::vector<long> recompute_marks() const;

  /// Sum of marks over grey and black vertices.
  long odd_mark_sum() const;

  /// Apply a vertex relabeling: vertex i of the result is vertex perm[i].
  DynkinDiagram permuted(const std::vector<int>& perm) const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.vertices_.size() == b.vertices_.size() && a.gram_ == b.gram_ &&
           equal_vertices(a, b);
  }

 private:
  static bool equal_vertices(const DynkinDiagram& a, const DynkinDiagram& b);

  std::vector<Vertex> vertices_;
  RatMatrix gram_;
  std::optional<FamilySpec> family_;
};

/// Build the diagram of a simple system.  Colors come from parity and the
/// Gram diagonal; marks are the minimal positive integer null vector.
/// Throws not_affine_error if the Gram corank is not 1, and
/// inconsistent_system_error if the null vector is not sign-definite.
DynkinDiagram from_simple_roots(const std::vector<WeightVector>& roots);

/// Attach alpha_0 = delta - gamma in front of a finite simple system.
DynkinDiagram affinize(const std::vector<WeightVector>& finite_roots, const WeightVector& gamma,
                       const WeightVector& delta);

/// from_simple_roots of the family's simple system, with the family tag set.
DynkinDiagram family_diagram(const FamilySpec& spec);

}  // namespace vgk

#endif
