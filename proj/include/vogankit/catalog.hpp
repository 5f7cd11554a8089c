#ifndef VOGANKIT_CATALOG_HPP
#define VOGANKIT_CATALOG_HPP

#include <string>
#include <vector>

#include "vogankit/vogan.hpp"

namespace vgk {

struct CatalogRecord {
  std::vector<std::string> painted_roles;
  std::string d_role;  // identity | swap_left_fork | swap_right_fork | swap_both_forks
};

struct CatalogFamily {
  Family family;
  std::string group_tag;  // "A"/"B" where a family has two printed groups
  int pictured_m = 1, pictured_n = 1;
  int coverage_min_m = 1, coverage_min_n = 1;
  bool elided = false;
  std::vector<long> pictured_marks;
  std::vector<std::string> pictured_colors;
  std::string interpretation;
  std::vector<CatalogRecord> records;
};

struct InstantiatedRecord {
  VoganDiagram vd;
  std::string group_tag;
  bool elided = false;
  CatalogRecord source;
};

class Catalog {
 public:
  static Catalog load(const std::string& path);
  /// Default path, overridable via the VOGANKIT_CATALOG environment variable.
  static const Catalog& builtin();

  const std::vector<CatalogFamily>& families() const { return families_; }

  /// Concrete pictured records at the requested rank.  Throws coverage_error
  /// for families outside the catalog or ranks below the coverage minimum.
  std::vector<InstantiatedRecord> expected_diagrams(const FamilySpec& spec) const;

  std::size_t total_records() const;

 private:
  std::vector<CatalogFamily> families_;
};

/// Resolve a painted-slot role name to a vertex index of the family diagram.
int resolve_role(const FamilySpec& spec, const std::string& role);

/// Resolve a d role to an involution on the family diagram.
Involution resolve_d(const FamilySpec& spec, const std::string& d_role);

}  // namespace vgk

#endif
