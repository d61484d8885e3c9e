#include "monideal/ring.hpp"

#include <set>
#include <stdexcept>

namespace monideal {

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  std::set<std::string> seen;
  for (const auto& name : *names_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable name: " + name);
  }
}

Ring Ring::with_prefix(const std::string& prefix, int count) {
  if (count < 0) throw std::invalid_argument("negative variable count");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(count));
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return Ring(std::move(names));
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace monideal
