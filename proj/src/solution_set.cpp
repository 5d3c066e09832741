#include "enumcc/solution_set.hpp"

#include <algorithm>

namespace enumcc {

std::vector<Membership> SolutionSet::sorted() const {
  std::vector<Membership> out(index_.begin(), index_.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace enumcc
