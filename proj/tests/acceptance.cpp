// Acceptance run: one PASS/FAIL line per criterion, with its time limit.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "orbichow/orbichow.hpp"

using namespace orbichow;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

constexpr double kLimitProjective = 10;
constexpr double kLimitP235 = 30;
constexpr double kLimitChain = 30;
constexpr double kLimitSemigroup = 120;
constexpr double kLimitFibre = 120;
constexpr double kLimitRescale = 60;
constexpr double kLimitProperties = 120;
constexpr double kLimitDeterminism = 120;
constexpr std::int64_t kPropertyCases = 500;

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = Outcome{false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit) out = Outcome{false, "took longer than the limit"};
  if (!out.ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << id << " [" << title << "]: " << (out.ok ? "PASS" : "FAIL") << " (" << secs << " s, limit "
       << limit << " s)";
  if (!out.note.empty()) line << " - " << out.note;
  std::cout << line.str() << std::endl;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(ORBICHOW_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  if (WEXITSTATUS(status) != 0) throw std::runtime_error(cmd + " exited with " + std::to_string(WEXITSTATUS(status)));
  return out;
}

Outcome projective_space() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto st = make_stack(WeightVector::ones(n + 1, WeightKind::weights), WeightVector::ones(n + 1));
    const auto q = orbifold_chow(st);
    const std::string tag = "n = " + std::to_string(n) + ": ";
    std::vector<std::pair<Exponent, std::size_t>> expected;
    for (std::size_t k = 0; k <= n; ++k) expected.emplace_back(static_cast<std::int64_t>(k), 1);
    o.require(q.dims() == expected, tag + "dims");
    o.require(q.total_dim() == n + 1, tag + "total dimension");
    // Basis e_k = x^k: e_a e_b = e_{a+b}, or 0 past degree n.
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = a; b <= n; ++b) {
        BasisVector want;
        if (a + b <= n) want[a + b] = 1;
        o.require(q.product(a, b) == want, tag + "structure constant");
      }
    RationalVector e0(n + 1, Exponent(0));
    e0[0] = 1;
    BasisVector power = q.reduce(zero_rep(n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
      o.require(power == BasisVector{{k, 1}}, tag + "x^k is not the degree k basis element");
      power = q.multiply(power, q.reduce(AlphaRep{e0}));
    }
    o.require(power.empty(), tag + "x^{n+1} is nonzero");
  }
  return o;
}

Outcome p235() {
  Outcome o;
  const WeightVector p({2, 3, 5});
  const auto pres = affine_embedding(p, 4);
  auto gen = [&](const std::string& name) { return pres.generators[pres.index_of(name)].value; };
  auto z = [](std::initializer_list<Exponent> v) { return AlphaRep{RationalVector(v)}; };
  const Exponent f5(1, 5);
  o.require(gen("w1").z_exp == z({2 * f5, 3 * f5, 0}), "w1");
  o.require(gen("w2").z_exp == z({4 * f5, f5, 0}), "w2");
  o.require(gen("w3").z_exp == z({f5, 4 * f5, 0}), "w3");
  o.require(gen("w4").z_exp == z({3 * f5, 2 * f5, 0}), "w4");
  o.require(gen("u1").z_exp == z({0, Exponent(1, 2), Exponent(1, 2)}), "u1");
  o.require(gen("v1").z_exp == z({Exponent(1, 3), 0, Exponent(1, 3)}), "v1");
  o.require(gen("s1").t_exp == Exponent(1, 6) && gen("s2").t_exp == Exponent(1, 10) && gen("s3").t_exp == Exponent(1, 15),
            "t-line generators");
  o.require(pres.generators.size() == 12, "ambient dimension");

  const std::vector<std::pair<std::string, std::string>> printed{
      {"w1^2", "w2*z1"}, {"w1*w2", "w3*z0"}, {"w1*w3", "w4*z1"}, {"w1*w4", "z0*z1"}, {"u1^2", "z1*z2"},
      {"v1^3", "z0*z2"}, {"s1", "s2*s3"},    {"s2^3", "s1*s3^2"}, {"s3^3", "s2^2"},   {"u1*v1", "s1"},
      {"u1*w1", "s2*w3"}, {"u1*w2", "s2*w4"}, {"u1*w3", "s2*z1"}, {"u1*w4", "s2*w1"}, {"v1*w1", "s3*w4"},
      {"v1*w2", "s3*z0"}, {"v1*w3", "s3*w1"}, {"v1*w4", "s3*w2"}};
  for (const auto& [l, r] : printed) o.require(verify_relation(l, r, pres), l + " = " + r + " fails");
  o.require(!verify_relation("u1*w1", "s2*w2", pres), "u1*w1 = s2*w2 unexpectedly holds");

  const auto st = make_stack(p, WeightVector::ones(3));
  const auto chow = orbifold_chow(st);
  const auto fibre = zero_fiber_quotient(st);
  o.require(chow.total_dim() == 10, "deformed-ring total dimension " + std::to_string(chow.total_dim()));
  o.require(fibre.total_dim() == 10, "semigroup-quotient total dimension " + std::to_string(fibre.total_dim()));
  o.require(chow == fibre, "the two quotients differ");
  if (o.ok) o.note = "u1*w1 checked as s2*w3; the printed s2*w2 has a different normal form";
  return o;
}

Outcome chains() {
  Outcome o;
  for (const auto& p : {WeightVector({1, 2, 4}), WeightVector({1, 3, 9})}) {
    const auto chain = chain_presentation(p);
    for (const auto& r : chain.relations) o.require(verify_relation(r, chain), p.str() + ": chain relation");
    const auto emb = affine_embedding(p, 4);
    o.require(equivalent_presentations(chain, emb, 4 + rewriting_slack), p.str() + ": not equivalent");
  }
  return o;
}

Outcome semigroup_suite() {
  Outcome o;
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b) {
      if (std::gcd(a, b) == 1) {
        o.require(verify_semigroup_generators(WeightVector({a, b}), 4).pass, "fails for " + WeightVector({a, b}).str());
        ++count;
      }
      for (std::int64_t c = 1; c <= 6; ++c)
        if (std::gcd(std::gcd(a, b), c) == 1) {
          o.require(verify_semigroup_generators(WeightVector({a, b, c}), 4).pass,
                    "fails for " + WeightVector({a, b, c}).str());
          ++count;
        }
    }
  if (o.ok) o.note = std::to_string(count) + " weight vectors";
  return o;
}

Outcome fibre_suite() {
  Outcome o;
  std::int64_t count = 0;
  std::vector<IntVector> ps, ws;
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b) {
      ws.push_back({a, b});
      if (std::gcd(a, b) == 1) ps.push_back({a, b});
      for (std::int64_t c = 1; c <= 4; ++c) {
        ws.push_back({a, b, c});
        if (std::gcd(std::gcd(a, b), c) == 1) ps.push_back({a, b, c});
      }
    }
  for (const auto& p : ps)
    for (const auto& w : ws) {
      if (w.size() != p.size()) continue;
      const auto st = make_stack(p, w);
      o.require(zero_fiber_quotient(st) == orbifold_chow(st), "differs for p = " + st->p.str() + ", w = " + st->w.str());
      ++count;
    }
  if (o.ok) o.note = std::to_string(count) + " (p, w) pairs";
  return o;
}

Outcome rescale_suite() {
  Outcome o;
  const auto ones = WeightVector::ones(2);
  const auto hand = chow_invariance(ones, WeightVector({1, 2}), 3);
  o.require(hand.pass, "((1,2),(1,1),3): " + (hand.failures.empty() ? std::string() : hand.failures.front()));
  const std::vector<std::pair<Exponent, std::size_t>> expected{
      {0, 1}, {Exponent(1, 3), 1}, {Exponent(1, 2), 1}, {Exponent(2, 3), 1}, {1, 1}};
  o.require(hand.degree_dims_left == expected && hand.degree_dims_right == expected, "hand-verified dims");
  o.require(chow_invariance(ones, WeightVector({1, 1}), 2).pass, "((1,1),(1,1),2)");
  o.require(chow_invariance(ones, WeightVector({2, 3}), 5).pass, "((2,3),(1,1),5)");
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::string summary;
  for (const auto& s : run_property_suites(20240611, kPropertyCases)) {
    o.require(s.cases >= kPropertyCases, s.name + " ran too few cases");
    o.require(s.pass(), s.name + ": " + std::to_string(s.failures) + " failures" +
                            (s.examples.empty() ? "" : " e.g. " + s.examples.front()));
    summary += (summary.empty() ? "" : ", ") + s.name + " " + std::to_string(s.cases);
  }
  if (o.ok) o.note = summary;
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> runs{
      "chow --p 1,1,1,1,1,1,1 --w 1,1,1,1,1,1,1", "chow --p 1,1,1 --w 1,1,1 --format latex",
      "chow --p 2,3,5 --w 1,1,1",                  "chow --p 2,3,5 --format singular",
      "fibration --p 2,3,5 --format singular",     "fibration --p 2,3,5",
      "fibration --p 1,2,4 --format macaulay2",    "fibration --p 1,3,9 --bound 4",
      "semigroup --p 2,3,5"};
  for (const auto& args : runs) {
    const auto first = run_cli(args);
    o.require(!first.empty(), args + ": empty output");
    o.require(first == run_cli(args), args + ": output differs between runs");
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "projective space", kLimitProjective, projective_space);
  criterion(2, "P(2,3,5)", kLimitP235, p235);
  criterion(3, "chain case", kLimitChain, chains);
  criterion(4, "semigroup generators", kLimitSemigroup, semigroup_suite);
  criterion(5, "zero fibre equals Chow ring", kLimitFibre, fibre_suite);
  criterion(6, "rescaling", kLimitRescale, rescale_suite);
  criterion(7, "property suites", kLimitProperties, property_suites);
  criterion(8, "determinism", kLimitDeterminism, determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
