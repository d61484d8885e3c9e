#include "monideal/splitting.hpp"

#include <climits>
#include <stdexcept>

#include "monideal/arithmetic.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/newton.hpp"

namespace monideal {

namespace {

Ring build_target(const Ring& source, const std::vector<int>& arities) {
  std::vector<std::string> names;
  for (int i = 0; i < source.arity(); ++i)
    for (int k = 1; k <= arities[static_cast<size_t>(i)]; ++k)
      names.push_back(source.var(i) + "_" + std::to_string(k));
  return Ring(std::move(names));
}

}  // namespace

SplittingMap::SplittingMap(Ring source, std::vector<int> arities)
    : source_(std::move(source)), arities_(std::move(arities)) {
  if (static_cast<int>(arities_.size()) != source_.arity())
    throw std::invalid_argument("one arity per source variable required");
  for (int t : arities_)
    if (t < 1) throw std::invalid_argument("splitting arities must be >= 1");
  offsets_.resize(arities_.size() + 1, 0);
  for (size_t i = 0; i < arities_.size(); ++i)
    offsets_[i + 1] = offsets_[i] + arities_[i];
  target_ = build_target(source_, arities_);
}

SplittingMap SplittingMap::uniform(const Ring& source, int t) {
  return SplittingMap(source, std::vector<int>(static_cast<size_t>(source.arity()), t));
}

SplittingMap SplittingMap::identity(const Ring& source) { return uniform(source, 1); }

Monomial SplittingMap::apply(const Monomial& m) const {
  detail::require_same_ring(m.ring(), source_, "SplittingMap::apply");
  std::vector<int> out(static_cast<size_t>(target_.arity()), 0);
  for (int i = 0; i < source_.arity(); ++i)
    for (int k = 0; k < arities_[static_cast<size_t>(i)]; ++k)
      out[static_cast<size_t>(offsets_[static_cast<size_t>(i)] + k)] = m.exponent(i);
  return Monomial(target_, std::move(out));
}

MonomialIdeal SplittingMap::apply(const MonomialIdeal& I) const {
  detail::require_same_ring(I.ring(), source_, "SplittingMap::apply");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(apply(g));
  return MonomialIdeal(target_, std::move(gens));
}

BettiData SplittingMap::transfer(const BettiData& source_data) const {
  detail::require_same_ring(source_data.ring(), source_, "SplittingMap::transfer");
  BettiData out(target_);
  for (const auto& [key, count] : source_data.entries()) {
    Monomial image = apply(Monomial(source_, key.second));
    out.add(key.first, image.exponents(), count);
  }
  return out;
}

int SplittingMap::regularity_via_transfer(const BettiData& source_data) const {
  detail::require_same_ring(source_data.ring(), source_,
                            "SplittingMap::regularity_via_transfer");
  if (source_data.entries().empty())
    throw std::domain_error("regularity of empty Betti data");
  int best = INT_MIN;
  for (const auto& [key, count] : source_data.entries()) {
    int deg = 0;
    for (size_t j = 0; j < key.second.size(); ++j) deg += arities_[j] * key.second[j];
    best = std::max(best, deg - key.first);
  }
  return best;
}

MonomialIdeal apply_construction(Construction c, const MonomialIdeal& I, int s) {
  switch (c) {
    case Construction::power:
      return power(I, s);
    case Construction::frobenius_power:
      return frobenius_power(I, s);
    case Construction::closure_of_power:
      return integral_closure_of_power(I, s);
    case Construction::symbolic_power:
      return symbolic_power(I, s);
  }
  throw std::logic_error("unknown construction");
}

bool commutes_with(const SplittingMap& sigma, Construction c,
                   const MonomialIdeal& I, int s) {
  detail::require_same_ring(sigma.source(), I.ring(), "commutes_with");
  MonomialIdeal split_then_build = apply_construction(c, sigma.apply(I), s);
  MonomialIdeal build_then_split = sigma.apply(apply_construction(c, I, s));
  return split_then_build == build_then_split;
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::power:
      return "power";
    case Construction::frobenius_power:
      return "frobenius";
    case Construction::closure_of_power:
      return "closure";
    case Construction::symbolic_power:
      return "symbolic";
  }
  return "unknown";
}

}  // namespace monideal
