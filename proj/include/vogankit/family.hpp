#ifndef VOGANKIT_FAMILY_HPP
#define VOGANKIT_FAMILY_HPP

#include <optional>
#include <string>

namespace vgk {

/// The eight twisted families.  Names follow the usual sl/osp notation;
/// the trailing number is the twist order.
enum class Family {
  sl_2m_2n_2,      // sl(2m|2n)^2
  sl_2m1_2n_2,     // sl(2m+1|2n)^2
  sl_2m1_2n1_2,    // sl(2m+1|2n+1)^2
  sl_2_2n_2,       // sl(2|2n)^2
  sl_2_2n1_2,      // sl(2|2n+1)^2
  osp_2m_2n_2,     // osp(2m|2n)^2
  osp_2_2n_2,      // osp(2|2n)^2
  sl_1_2n1_4,      // sl(1|2n+1)^4
};

struct FamilySpec {
  Family family;
  int m = 1;
  int n = 1;

  int twist() const { return family == Family::sl_1_2n1_4 ? 4 : 2; }

  /// Throws rank_error if (m,n) is below the family minimum, i.e. where the
  /// diagram shape (fork ends, chain) would collapse.
  void validate() const;
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Smallest (m,n) the library constructs for this family.
std::pair<int, int> minimal_rank(Family f);

/// True if the m parameter is fixed by the family name (e.g. sl(2|2n)^2).
bool m_is_fixed(Family f);

}  // namespace vgk

#endif
