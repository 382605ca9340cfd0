#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace clawham {

/// Default cap on backtracking nodes for the exact searches.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class SearchStatus { kFound, kAbsent, kInconclusive };

const char* to_string(SearchStatus s);

/// Tri-state outcome of an exact search: a witness, a proof of absence by
/// exhaustion, or a budget stop.
template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::kFound; }
  bool absent() const { return status == SearchStatus::kAbsent; }
  bool inconclusive() const { return status == SearchStatus::kInconclusive; }

  static SearchResult make_found(T w, std::uint64_t nodes) {
    return {SearchStatus::kFound, std::move(w), nodes};
  }
  static SearchResult make_absent(std::uint64_t nodes) {
    return {SearchStatus::kAbsent, std::nullopt, nodes};
  }
  static SearchResult make_inconclusive(std::uint64_t nodes) {
    return {SearchStatus::kInconclusive, std::nullopt, nodes};
  }
};

/// Node counter shared by one search invocation.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  /// Counts one node; false once the limit is exceeded.
  bool tick() { return ++used_ <= limit_; }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace clawham
