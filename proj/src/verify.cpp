#include "theta/verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::vector<int> twos_then(int k, std::vector<int> tail) {
  std::vector<int> v(static_cast<std::size_t>(k) - tail.size(), 2);
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

std::string label_of(const char* quantity, const PathLengths& p) { return std::string(quantity) + p.to_string(); }

template <class Fn>
double labelled(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(label + ": " + e.what(), e.best_iterate(), e.residual());
  } catch (const DomainError& e) {
    throw DomainError(label + ": " + e.what());
  }
}

double rho_of(const PathLengths& p) {
  return labelled(label_of("rho", p), [&] { return rho(p); });
}

double rtilde_of(const PathLengths& p) {
  return labelled(label_of("rtilde", p), [&] { return unique_positive_root(htilde_polynomial(p)); });
}

}  // namespace

TheoremCertificate verify_theorem_k(int k) {
  if (k < 3 || k > 8) throw DomainError("verify_theorem_k: requires 3 <= k <= 8");
  const PathLengths all_two = PathLengths::uniform(2, k);
  const double target = rho_of(all_two);
  const std::string target_label = label_of("rho", all_two);

  TheoremCertificate cert;
  cert.k = k;
  auto add = [&](const std::string& label, double lhs, double rhs) {
    cert.comparisons.push_back({label, lhs, rhs, lhs < rhs});
  };

  const PathLengths one_three(twos_then(k, {3}));
  std::vector<PathLengths> frontier;
  if (k <= 5) {
    add(label_of("rtilde", one_three) + " < " + target_label, rtilde_of(one_three), target);
    frontier.push_back(one_three);
  } else {
    const PathLengths one_four(twos_then(k, {4}));
    const PathLengths two_threes(twos_then(k, {3, 3}));
    add(label_of("rho", one_three) + " < " + target_label, rho_of(one_three), target);
    if (k <= 7) {
      add(label_of("rtilde", one_four) + " < " + target_label, rtilde_of(one_four), target);
      frontier.push_back(one_four);
    } else {
      const PathLengths one_five(twos_then(k, {5}));
      add(label_of("rho", one_four) + " < " + target_label, rho_of(one_four), target);
      add(label_of("rtilde", one_five) + " < " + target_label, rtilde_of(one_five), target);
      frontier.push_back(one_five);
    }
    add(label_of("rtilde", two_threes) + " < " + target_label, rtilde_of(two_threes), target);
    frontier.push_back(two_threes);
  }

  // rtilde decreases in each length, so one step past each frontier case
  // must not climb back above it.
  for (const PathLengths& p : frontier) {
    const PathLengths next = p.incremented(static_cast<std::size_t>(p.k() - 1));
    add(label_of("rtilde", next) + " < " + label_of("rtilde", p), rtilde_of(next), rtilde_of(p));
  }

  cert.overall = true;
  for (const Comparison& c : cert.comparisons) cert.overall = cert.overall && c.holds;
  return cert;
}

LimitObstruction limit_obstruction(int k) {
  if (k < 4) throw DomainError("limit_obstruction: requires k >= 4");
  LimitObstruction out;
  out.k = k;
  out.rtilde_limit = rtilde_of(PathLengths::uniform(2, k - 1));
  out.rho_all_two = rho_of(PathLengths::uniform(2, k));
  out.obstructs = out.rtilde_limit > out.rho_all_two;
  return out;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {{2, 2, 2}, {1.5247025799, 1.5905667405, 1.5905667405, 3.1478990357}},
      {{2, 2, 3}, {1.3247179572, 1.4655712319, 1.4655712319, 2.8235871268}},
      {{2, 2, 2, 2}, {1.9635530390, 2.0652388409, 2.0959187459, 3.6296581268}},
      {{2, 2, 2, 3}, {1.6180339887, 1.8003794650, 1.9038165409, 3.3067093454}},
      {{2, 2, 2, 2, 2}, {2.3602010481, 2.4788311017, 2.5569445891, 4.0795956235}},
      {{2, 2, 2, 2, 3}, {1.9596554046, 2.0481965587, 2.3283569921, 3.7595287461}},
      {{2, 2, 2, 2, 4}, {1.9125157044, 2.0726410424, 2.2158195963, 3.6668970270}},
      {{2, 2, 2, 2, 5}, {2.0227195761, 2.1137657905, 2.1572723181, 3.6401168028}},
      {{2, 2, 2, 2, 6}, {1.9492237868, 2.0928219450, 2.1267590770, 3.6325613931}},
      {{2, 2, 2, 2, 2, 2}, {2.7305222731, 2.8521866737, 2.9891971006, 4.5063232460}},
      {{2, 2, 2, 2, 2, 3}, {2.3291754791, 2.4702504048, 2.7400794700, 4.1896653876}},
      {{2, 2, 2, 2, 2, 4}, {2.3208606055, 2.4487347678, 2.6342641478, 4.1075181051}},
      {{2, 2, 2, 2, 3, 3}, {2.0524815723, 2.2641426827, 2.5176585462, 3.8793014522}},
      {{2, 2, 2, 2, 2, 2, 2}, {3.0823336669, 3.1959268744, 3.4006086206, 4.9150761863}},
      {{2, 2, 2, 2, 2, 2, 3}, {2.6933092033, 2.8543267466, 3.1395749040, 4.6019501648}},
      {{2, 2, 2, 2, 2, 2, 4}, {2.7030241913, 2.8316875864, 3.0429807861, 4.5281826533}},
      {{2, 2, 2, 2, 2, 3, 3}, {2.3573224846, 2.4527687226, 2.8983449779, 4.2931001487}},
      {{2, 2, 2, 2, 2, 2, 2, 2}, {3.4201564280, 3.5685068590, 3.7959050193, 5.3093300653}},
      {{2, 2, 2, 2, 2, 2, 2, 3}, {3.0446178232, 3.2040479885, 3.5278440533, 4.9996840573}},
      {{2, 2, 2, 2, 2, 2, 2, 4}, {3.0625912820, 3.2129169213, 3.4402140830, 4.9327412477}},
      {{2, 2, 2, 2, 2, 2, 2, 5}, {3.0953618332, 3.1953189320, 3.4125677445, 4.9187003835}},
      {{2, 2, 2, 2, 2, 2, 3, 3}, {2.6885399588, 2.8486049323, 3.2745245420, 4.6929626253}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 2}, {3.7468849281, 3.9272779941, 4.1781887719, 5.6915378807}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 3}, {3.3836067543, 3.5282506474, 3.9060114610, 5.3852446658}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 4}, {3.4054981704, 3.5867024115, 3.8263498519, 5.3239577745}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 5}, {3.4292505541, 3.5677746122, 3.8040844502, 5.3121036374}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 6}, {3.4182415134, 3.5704257784, 3.7980747620, 5.3098533475}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 7}, {3.4200422197, 3.5685857538, 3.7964779130, 5.3094286637}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 8}, {3.4203605983, 3.5684058522, 3.7960560504, 5.3093486377}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 9}, {3.4200947731, 3.5685249008, 3.7959448158, 5.3093335634}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 10}, {3.4201605551, 3.5685220773, 3.7959155041, 5.3093307241}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 11}, {3.4201602535, 3.5685079914, 3.7959077815, 5.3093301894}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 12}, {3.4201547358, 3.5685071412, 3.7959057470, 5.3093300886}},
      {{2, 2, 2, 2, 2, 2, 2, 2, 13}, {3.4201566935, 3.5685072051, 3.7959052110, 5.3093300697}},
      {{2, 2, 2, 2, 2, 2, 2, 3, 3}, {3.0254986086, 3.2079141314, 3.6449248003, 5.0809413850}},
  };
  return rows;
}

Table1Check check_table1_row(const Table1Row& row, double tolerance) {
  Table1Check out{row, bound_report(PathLengths(row.paths), tolerance)};
  const std::array<double, 4> got = {out.computed.rho, out.computed.r, out.computed.rtilde, out.computed.calR};
  out.ok = true;
  for (std::size_t c = 0; c < 4; ++c) {
    out.deviation[c] = std::abs(got[c] - row.printed[c]);
    out.ok = out.ok && out.deviation[c] <= kTable1Tolerance;
  }
  return out;
}

std::vector<Table1Check> reproduce_table1(double tolerance) {
  std::vector<Table1Check> out;
  for (const Table1Row& row : table1_rows()) out.push_back(check_table1_row(row, tolerance));
  return out;
}

}  // namespace theta
