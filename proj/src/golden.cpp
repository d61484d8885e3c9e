#include "monideal/repro.hpp"

#include <tuple>

namespace monideal {

MonomialIdeal sturmfels_ideal() {
  Ring ring = Ring::with_prefix("x", 6);
  const std::vector<std::vector<int>> exps = {
      {1, 0, 0, 1, 1, 0},  // x1*x4*x5
      {1, 0, 1, 0, 0, 1},  // x1*x3*x6
      {0, 1, 1, 1, 0, 0},  // x2*x3*x4
      {0, 1, 0, 0, 1, 1},  // x2*x5*x6
      {0, 0, 1, 1, 1, 0},  // x3*x4*x5
      {0, 0, 1, 1, 0, 1},  // x3*x4*x6
      {0, 0, 1, 0, 1, 1},  // x3*x5*x6
      {0, 0, 0, 1, 1, 1},  // x4*x5*x6
  };
  std::vector<Monomial> gens;
  gens.reserve(exps.size());
  for (const auto& e : exps) gens.emplace_back(ring, e);
  return MonomialIdeal(ring, std::move(gens));
}

namespace golden {

namespace {

BettiTable make_table(std::initializer_list<std::tuple<int, int, long long>> cells) {
  std::map<BettiTable::Key, long long> entries;
  for (const auto& [row, col, count] : cells) entries[BettiTable::Key(row, col)] = count;
  return BettiTable(std::move(entries));
}

}  // namespace

BettiTable betti_frobenius_square() {
  return make_table({{6, 0, 8}, {7, 1, 11}, {8, 2, 4}});
}

BettiTable betti_square() {
  return make_table({{6, 0, 36},
                     {6, 1, 84},
                     {6, 2, 75},
                     {6, 3, 32},
                     {6, 4, 6},
                     {7, 1, 1},
                     {7, 2, 4},
                     {7, 3, 6},
                     {7, 4, 4},
                     {7, 5, 1}});
}

BettiTable betti_closure_square() {
  return make_table(
      {{6, 0, 37}, {6, 1, 90}, {6, 2, 89}, {6, 3, 48}, {6, 4, 15}, {6, 5, 2}});
}

BettiTable betti_symbolic_square() {
  return make_table({{4, 0, 1}, {6, 0, 20}, {6, 1, 40}, {6, 2, 24}, {6, 3, 4}});
}

std::vector<std::vector<int>> symbolic_square_generators() {
  return {
      {0, 0, 1, 1, 1, 1}, {0, 0, 0, 2, 2, 2}, {0, 1, 0, 1, 2, 2}, {0, 0, 2, 0, 2, 2},
      {0, 1, 1, 0, 2, 2}, {0, 2, 0, 0, 2, 2}, {1, 0, 2, 0, 1, 2}, {1, 1, 1, 0, 1, 2},
      {0, 0, 2, 2, 0, 2}, {1, 0, 2, 1, 0, 2}, {2, 0, 2, 0, 0, 2}, {1, 0, 0, 2, 2, 1},
      {1, 1, 0, 1, 2, 1}, {0, 1, 2, 2, 0, 1}, {1, 1, 2, 1, 0, 1}, {0, 0, 2, 2, 2, 0},
      {1, 0, 1, 2, 2, 0}, {2, 0, 0, 2, 2, 0}, {0, 1, 2, 2, 1, 0}, {1, 1, 1, 2, 1, 0},
      {0, 2, 2, 2, 0, 0},
  };
}

std::vector<std::vector<int>> closure_square_generators() {
  return {
      {0, 0, 0, 2, 2, 2}, {0, 0, 1, 1, 2, 2}, {0, 1, 0, 1, 2, 2}, {0, 0, 2, 0, 2, 2},
      {0, 1, 1, 0, 2, 2}, {0, 2, 0, 0, 2, 2}, {0, 0, 1, 2, 1, 2}, {0, 0, 2, 1, 1, 2},
      {0, 1, 1, 1, 1, 2}, {1, 0, 1, 1, 1, 2}, {1, 0, 2, 0, 1, 2}, {1, 1, 1, 0, 1, 2},
      {0, 0, 2, 2, 0, 2}, {1, 0, 2, 1, 0, 2}, {2, 0, 2, 0, 0, 2}, {0, 0, 1, 2, 2, 1},
      {1, 0, 0, 2, 2, 1}, {0, 0, 2, 1, 2, 1}, {0, 1, 1, 1, 2, 1}, {1, 0, 1, 1, 2, 1},
      {1, 1, 0, 1, 2, 1}, {0, 0, 2, 2, 1, 1}, {0, 1, 1, 2, 1, 1}, {1, 0, 1, 2, 1, 1},
      {0, 1, 2, 1, 1, 1}, {1, 0, 2, 1, 1, 1}, {0, 2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
      {2, 0, 1, 1, 1, 1}, {0, 1, 2, 2, 0, 1}, {1, 1, 2, 1, 0, 1}, {0, 0, 2, 2, 2, 0},
      {1, 0, 1, 2, 2, 0}, {2, 0, 0, 2, 2, 0}, {0, 1, 2, 2, 1, 0}, {1, 1, 1, 2, 1, 0},
      {0, 2, 2, 2, 0, 0},
  };
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"all / 1", {1, 1, 1, 1, 1, 1}, 8, 7, 6, 6},
      {"x1 / 2", {2, 1, 1, 1, 1, 1}, 10, 9, 8, 8},
      {"x1, x2 / 2", {2, 2, 1, 1, 1, 1}, 10, 11, 9, 8},
      {"x1, x2, x3 / 2", {2, 2, 2, 1, 1, 1}, 12, 13, 11, 10},
      {"x1, x2, x3, x4 / 2", {2, 2, 2, 2, 1, 1}, 14, 15, 13, 12},
      {"x1, x2, x3, x4, x5 / 2", {2, 2, 2, 2, 2, 1}, 16, 17, 15, 14},
      {"x2, x3, x4, x5, x6 / 3", {1, 3, 3, 3, 3, 3}, 28, 27, 26, 22},
      {"x3, x4, x5, x6 / 3", {1, 1, 3, 3, 3, 3}, 24, 23, 22, 20},
      {"x4, x5, x6 / 3", {1, 1, 1, 3, 3, 3}, 20, 19, 18, 18},
      {"x5, x6 / 3", {1, 1, 1, 1, 3, 3}, 16, 15, 14, 14},
      {"x6 / 3", {1, 1, 1, 1, 1, 3}, 12, 11, 10, 10},
      {"x1 / 3", {3, 1, 1, 1, 1, 1}, 12, 11, 10, 10},
      {"x1, x2 / 3", {3, 3, 1, 1, 1, 1}, 12, 15, 12, 10},
      {"x1, x2, x3 / 3", {3, 3, 3, 1, 1, 1}, 16, 19, 16, 14},
      {"x1, x2, x3, x4 / 3", {3, 3, 3, 3, 1, 1}, 20, 23, 20, 18},
      {"x1, x2, x3, x4, x5 / 3", {3, 3, 3, 3, 3, 1}, 24, 27, 24, 22},
      {"x1, x3, x5 / 3", {3, 1, 3, 1, 3, 1}, 20, 19, 18, 16},
      {"x2, x4, x6 / 3", {1, 3, 1, 3, 1, 3}, 20, 19, 18, 16},
      {"x1, x3 / 3", {3, 1, 3, 1, 1, 1}, 16, 15, 14, 14},
      {"x4, x6 / 3", {1, 1, 1, 3, 1, 3}, 16, 15, 14, 14},
  };
  return rows;
}

}  // namespace golden

}  // namespace monideal
