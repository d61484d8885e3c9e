#include "monideal/repro.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monideal/arithmetic.hpp"
#include "monideal/decomposition.hpp"
#include "monideal/newton.hpp"
#include "monideal/splitting.hpp"

namespace monideal {

namespace {

std::string describe_table(const BettiTable& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, count] : t.entries()) {
    if (!first) out << ", ";
    out << "(" << key.first << "," << key.second << ")=" << count;
    first = false;
  }
  return out.str();
}

CheckResult check_table(const std::string& label, const std::string& where,
                        const BettiTable& got, const BettiTable& expected) {
  CheckResult r{label, where, got == expected, ""};
  if (!r.pass)
    r.detail = "expected {" + describe_table(expected) + "} got {" +
               describe_table(got) + "}";
  return r;
}

CheckResult check_int(const std::string& label, const std::string& where, int got,
                      int expected) {
  CheckResult r{label, where, got == expected, ""};
  if (!r.pass)
    r.detail = "expected " + std::to_string(expected) + " got " + std::to_string(got);
  return r;
}

CheckResult check_ideal(const std::string& label, const std::string& where,
                        const MonomialIdeal& got,
                        const std::vector<std::vector<int>>& expected_exps) {
  std::vector<Monomial> expected_gens;
  expected_gens.reserve(expected_exps.size());
  for (const auto& e : expected_exps) expected_gens.emplace_back(got.ring(), e);
  MonomialIdeal expected(got.ring(), std::move(expected_gens));
  CheckResult r{label, where, got == expected, ""};
  if (!r.pass) {
    std::ostringstream detail;
    detail << "expected " << expected.generators().size() << " generators, got "
           << got.generators().size();
    for (const auto& g : expected.generators())
      if (!std::binary_search(got.generators().begin(), got.generators().end(), g)) {
        detail << "; missing one expected generator";
        break;
      }
    r.detail = detail.str();
  }
  return r;
}

}  // namespace

bool ReproReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ReproReport run_sturmfels(const Field& field) {
  const MonomialIdeal J = sturmfels_ideal();
  const MonomialIdeal frob = frobenius_power(J, 2);
  const MonomialIdeal square = power(J, 2);
  const MonomialIdeal closure = integral_closure_of_power(J, 2);
  const MonomialIdeal symbolic = symbolic_power(J, 2);

  const BettiData b_frob = betti_numbers(frob, field);
  const BettiData b_square = betti_numbers(square, field);
  const BettiData b_closure = betti_numbers(closure, field);
  const BettiData b_symbolic = betti_numbers(symbolic, field);

  ReproReport report;
  report.checks.push_back(check_table("betti(J^[2])", "reference Betti table, Frobenius square",
                                      betti_table(b_frob), golden::betti_frobenius_square()));
  report.checks.push_back(check_table("betti(J^2)", "reference Betti table, ordinary square",
                                      betti_table(b_square), golden::betti_square()));
  report.checks.push_back(check_table("betti(closure(J^2))",
                                      "reference Betti table, closure of the square",
                                      betti_table(b_closure), golden::betti_closure_square()));
  report.checks.push_back(check_table("betti(J^(2))", "reference Betti table, symbolic square",
                                      betti_table(b_symbolic), golden::betti_symbolic_square()));
  report.checks.push_back(
      check_int("reg(J^[2])", "reference regularity list", b_frob.regularity(), 8));
  report.checks.push_back(
      check_int("reg(J^2)", "reference regularity list", b_square.regularity(), 7));
  report.checks.push_back(check_int("reg(closure(J^2))", "reference regularity list",
                                    b_closure.regularity(), 6));
  report.checks.push_back(
      check_int("reg(J^(2))", "reference regularity list", b_symbolic.regularity(), 6));
  report.checks.push_back(check_int("projdim(J^(2))", "reference projective dimension",
                                    b_symbolic.projective_dimension(), 3));
  report.checks.push_back(check_ideal("generators of J^(2)",
                                      "reference list of 21 symbolic-square generators",
                                      symbolic, golden::symbolic_square_generators()));
  report.checks.push_back(check_ideal("generators of closure(J^2)",
                                      "reference list of 37 closure generators", closure,
                                      golden::closure_square_generators()));
  return report;
}

ReproReport run_theorem1(int e, const Field& field) {
  if (e < 1) throw std::invalid_argument("run_theorem1 needs e >= 1");
  const MonomialIdeal J = sturmfels_ideal();
  const int expected_frob = 10 * e - 2;
  const int expected_square = 12 * e - 5;
  const int expected_closure = 11 * e - 5;
  const int expected_symbolic = 9 * e - 3;
  const std::string where = "regularity formulas for the uniform split, e = " +
                            std::to_string(e);

  ReproReport report;
  if (e <= 2) {
    const SplittingMap sigma = SplittingMap::uniform(J.ring(), e);
    const MonomialIdeal K = sigma.apply(J);
    report.checks.push_back(check_int("reg(K^[2]), direct, e=" + std::to_string(e), where,
                                      regularity(frobenius_power(K, 2), field),
                                      expected_frob));
    report.checks.push_back(check_int("reg(K^2), direct, e=" + std::to_string(e), where,
                                      regularity(power(K, 2), field), expected_square));
    report.checks.push_back(check_int("reg(closure(K^2)), direct, e=" + std::to_string(e),
                                      where,
                                      regularity(integral_closure_of_power(K, 2), field),
                                      expected_closure));
    report.checks.push_back(check_int("reg(K^(2)), direct, e=" + std::to_string(e), where,
                                      regularity(symbolic_power(K, 2), field),
                                      expected_symbolic));
  }
  if (e >= 2) {
    const SplittingMap sigma = SplittingMap::uniform(J.ring(), e);
    report.checks.push_back(check_int(
        "reg(K^[2]), transfer, e=" + std::to_string(e), where,
        sigma.regularity_via_transfer(betti_numbers(frobenius_power(J, 2), field)),
        expected_frob));
    report.checks.push_back(
        check_int("reg(K^2), transfer, e=" + std::to_string(e), where,
                  sigma.regularity_via_transfer(betti_numbers(power(J, 2), field)),
                  expected_square));
    report.checks.push_back(check_int(
        "reg(closure(K^2)), transfer, e=" + std::to_string(e), where,
        sigma.regularity_via_transfer(
            betti_numbers(integral_closure_of_power(J, 2), field)),
        expected_closure));
    report.checks.push_back(check_int(
        "reg(K^(2)), transfer, e=" + std::to_string(e), where,
        sigma.regularity_via_transfer(betti_numbers(symbolic_power(J, 2), field)),
        expected_symbolic));
  }
  return report;
}

ReproReport run_table(const std::vector<int>& rows, bool direct, const Field& field) {
  const auto& all_rows = golden::table_rows();
  std::vector<int> selected = rows;
  if (selected.empty()) {
    selected.resize(all_rows.size());
    std::iota(selected.begin(), selected.end(), 1);
  }
  for (int r : selected)
    if (r < 1 || r > static_cast<int>(all_rows.size()))
      throw std::invalid_argument("table row numbers run from 1 to " +
                                  std::to_string(all_rows.size()));

  const MonomialIdeal J = sturmfels_ideal();
  const BettiData b_frob = betti_numbers(frobenius_power(J, 2), field);
  const BettiData b_square = betti_numbers(power(J, 2), field);
  const BettiData b_closure = betti_numbers(integral_closure_of_power(J, 2), field);
  const BettiData b_symbolic = betti_numbers(symbolic_power(J, 2), field);

  ReproReport report;
  for (int rn : selected) {
    const golden::TableRow& row = all_rows[static_cast<size_t>(rn - 1)];
    const SplittingMap sigma(J.ring(), row.arities);
    const int got_frob = sigma.regularity_via_transfer(b_frob);
    const int got_square = sigma.regularity_via_transfer(b_square);
    const int got_closure = sigma.regularity_via_transfer(b_closure);
    const int got_symbolic = sigma.regularity_via_transfer(b_symbolic);

    const std::string where = "regularity table row '" + row.label + "'";
    CheckResult r;
    r.label = "table row " + std::to_string(rn) + " '" + row.label + "' (transfer)";
    r.where = where;
    r.pass = got_frob == row.reg_frobenius && got_square == row.reg_power &&
             got_closure == row.reg_closure && got_symbolic == row.reg_symbolic;
    {
      std::ostringstream detail;
      detail << "frobenius " << got_frob << "/" << row.reg_frobenius << ", power "
             << got_square << "/" << row.reg_power << ", closure " << got_closure << "/"
             << row.reg_closure << ", symbolic " << got_symbolic << "/"
             << row.reg_symbolic << (r.pass ? " (got/reference)" : " (got/expected)");
      r.detail = detail.str();
    }
    report.checks.push_back(std::move(r));

    if (direct && sigma.target().arity() <= 12) {
      const MonomialIdeal K = sigma.apply(J);
      const int d_frob = regularity(frobenius_power(K, 2), field);
      const int d_square = regularity(power(K, 2), field);
      const int d_closure = regularity(integral_closure_of_power(K, 2), field);
      const int d_symbolic = regularity(symbolic_power(K, 2), field);
      CheckResult d;
      d.label = "table row " + std::to_string(rn) + " '" + row.label + "' (direct)";
      d.where = where;
      d.pass = d_frob == got_frob && d_square == got_square && d_closure == got_closure &&
               d_symbolic == got_symbolic;
      std::ostringstream detail;
      detail << "direct " << d_frob << "," << d_square << "," << d_closure << ","
             << d_symbolic << " vs transfer " << got_frob << "," << got_square << ","
             << got_closure << "," << got_symbolic;
      d.detail = detail.str();
      report.checks.push_back(std::move(d));
    }
  }
  return report;
}

std::string format_report(const ReproReport& report) {
  std::ostringstream out;
  size_t failed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) {
      out << "PASS " << c.label << "\n";
    } else {
      ++failed;
      out << "FAIL " << c.label << ": " << c.detail << " [" << c.where << "]\n";
    }
  }
  if (failed == 0)
    out << "all " << report.checks.size() << " checks passed\n";
  else
    out << failed << " of " << report.checks.size() << " checks FAILED\n";
  return out.str();
}

}  // namespace monideal
