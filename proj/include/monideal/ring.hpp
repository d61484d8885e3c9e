#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monideal {

/// An ordered list of variable names. Immutable and cheap to copy; monomials
/// index into it by position, so the order is significant.
class Ring {
public:
  Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names);

  /// Ring with variables `<prefix>1 .. <prefix><count>`.
  static Ring with_prefix(const std::string& prefix, int count);

  int arity() const { return static_cast<int>(names_->size()); }
  const std::string& var(int i) const { return (*names_)[static_cast<size_t>(i)]; }
  const std::vector<std::string>& vars() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Ring& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace monideal
