#include "vogankit/family.hpp"

#include "vogankit/rational.hpp"

namespace vgk {

std::string family_name(Family f) {
  switch (f) {
    case Family::sl_2m_2n_2: return "sl(2m|2n)^2";
    case Family::sl_2m1_2n_2: return "sl(2m+1|2n)^2";
    case Family::sl_2m1_2n1_2: return "sl(2m+1|2n+1)^2";
    case Family::sl_2_2n_2: return "sl(2|2n)^2";
    case Family::sl_2_2n1_2: return "sl(2|2n+1)^2";
    case Family::osp_2m_2n_2: return "osp(2m|2n)^2";
    case Family::osp_2_2n_2: return "osp(2|2n)^2";
    case Family::sl_1_2n1_4: return "sl(1|2n+1)^4";
  }
  throw error("unreachable family tag");
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f :
       {Family::sl_2m_2n_2, Family::sl_2m1_2n_2, Family::sl_2m1_2n1_2, Family::sl_2_2n_2,
        Family::sl_2_2n1_2, Family::osp_2m_2n_2, Family::osp_2_2n_2, Family::sl_1_2n1_4}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::pair<int, int> minimal_rank(Family f) {
  switch (f) {
    case Family::sl_2m_2n_2: return {2, 2};   // forks at both ends
    case Family::sl_2m1_2n_2: return {1, 2};  // fork at the delta end
    case Family::sl_2m1_2n1_2: return {1, 1};
    case Family::sl_2_2n_2: return {1, 2};
    case Family::sl_2_2n1_2: return {1, 2};
    case Family::osp_2m_2n_2: return {1, 1};
    case Family::osp_2_2n_2: return {1, 1};
    case Family::sl_1_2n1_4: return {1, 1};
  }
  throw error("unreachable family tag");
}

bool m_is_fixed(Family f) {
  switch (f) {
    case Family::sl_2_2n_2:
    case Family::sl_2_2n1_2:
    case Family::osp_2_2n_2:
    case Family::sl_1_2n1_4: return true;
    default: return false;
  }
}

void FamilySpec::validate() const {
  if (m < 1 || n < 1) throw rank_error("rank parameters must be positive");
  if (m_is_fixed(family) && m != 1)
    throw rank_error("family " + family_name(family) + " fixes m = 1");
  auto [mm, mn] = minimal_rank(family);
  if (m < mm || n < mn)
    throw rank_error("family " + family_name(family) + " requires m >= " + std::to_string(mm) +
                     ", n >= " + std::to_string(mn));
}

}  // namespace vgk
