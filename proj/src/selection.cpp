#include "subsum/selection.hpp"

#include <algorithm>

namespace subsum {

Selection Selection::finite(std::vector<Index> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (!support.empty() && support.front() < 1)
    fail(Errc::InvalidArgument, "indices are 1-based");
  Selection s;
  s.support_ = std::move(support);
  return s;
}

Selection Selection::patterned(std::vector<Index> support, std::vector<TailPattern> patterns) {
  for (const auto& p : patterns) {
    if (p.modulus < 1 || p.start < 1) fail(Errc::InvalidArgument, "bad tail pattern");
  }
  Selection s = finite(std::move(support));
  // keep support and pattern coverage disjoint
  std::erase_if(s.support_, [&](Index n) {
    for (const auto& p : patterns)
      if (p.matches(n)) return true;
    return false;
  });
  s.patterns_ = std::move(patterns);
  return s;
}

bool Selection::contains(Index n) const {
  if (std::binary_search(support_.begin(), support_.end(), n)) return true;
  for (const auto& p : patterns_)
    if (p.matches(n)) return true;
  return false;
}

std::optional<Index> Selection::max_support() const {
  if (!patterns_.empty() || support_.empty()) return std::nullopt;
  return support_.back();
}

std::vector<Index> Selection::indices_upto(Index upto) const {
  std::vector<Index> out;
  for (Index n : support_) {
    if (n > upto) break;
    out.push_back(n);
  }
  if (!patterns_.empty()) {
    for (Index n = 1; n <= upto; ++n) {
      for (const auto& p : patterns_) {
        if (p.matches(n)) {
          out.push_back(n);
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

bool operator==(const Selection& a, const Selection& b) {
  if (a.support_ != b.support_) return false;
  if (a.patterns_.size() != b.patterns_.size()) return false;
  for (std::size_t i = 0; i < a.patterns_.size(); ++i) {
    const auto &p = a.patterns_[i], &q = b.patterns_[i];
    if (p.start != q.start || p.modulus != q.modulus || p.residue != q.residue) return false;
  }
  return true;
}

}  // namespace subsum
