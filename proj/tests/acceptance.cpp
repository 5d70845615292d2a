// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "affweyl/oracle.hpp"
#include "affweyl/resolution.hpp"
#include "affweyl/schubert.hpp"
#include "cli_support.hpp"
#include "helpers.hpp"

using namespace affweyl;
using namespace affweyl::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::vector<Coweight> box(int dim, int radius) {
  std::vector<Coweight> out;
  Coweight mu(dim, -radius);
  while (true) {
    out.push_back(mu);
    int k = 0;
    while (k < dim && mu[k] == radius) mu[k++] = -radius;
    if (k == dim) break;
    ++mu[k];
  }
  return out;
}

// 1. Formula length equals BFS length on the radius-8 ball.
void length_formula(Outcome& o) {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}, {'C', 3}}) {
    auto g = group(t, r);
    Ball ball = bfs_ball(g, 8);
    for (const auto& [x, l] : ball.members())
      o.require(g.length(x) == l, std::string(1, t) + std::to_string(r) + " length " + format_element(g, x));
    o.detail << t << r << ":" << ball.size() << " ";
  }
}

// 2. Bruhat order against the subword oracle, all pairs up to length 6.
void bruhat_subword(Outcome& o) {
  for (auto [t, r] : {std::pair{'A', 2}, {'C', 2}}) {
    auto g = group(t, r);
    Ball ball = bfs_ball(g, 6);
    std::size_t pairs = 0;
    for (const auto& w : ball.ordered()) {
      const auto below = subword_products(g, ball.word(w));
      for (const auto& u : ball.ordered()) {
        ++pairs;
        o.require(g.bruhat_leq(u, w) == below.contains(u),
                  format_element(g, u) + " <= " + format_element(g, w));
      }
    }
    o.detail << t << r << ":" << pairs << " pairs ";
  }
}

// 3. Max-min representative, root count and exhaustive max-min agree.
void maxmin_triple(Outcome& o) {
  auto g = group('C', 2);
  Ball ball = bfs_ball(g, 6);
  std::size_t triples = 0;
  for (const auto& fl : proper_facets(g))
    for (const auto& fr : proper_facets(g))
      for (const auto& x : ball.ordered()) {
        ++triples;
        const int a = g.length(maxmin_rep(g, x, fl, fr));
        const int b = waldspurger_length(g, x, fl, fr);
        const int c = oracle_maxmin(g, x, fl, fr).value;
        o.require(a == b && b == c, format_element(g, x) + " F'=" + fl.to_string() + " F=" + fr.to_string());
      }
  o.detail << triples << " triples";
}

// 4. Translation length of the antidominant representative.
void translation_dims(Outcome& o) {
  // |<mu, 2rho>| <= 12 bounds every coordinate: by 6 in type C (the
  // roots 2e_i), by 12 in type A (differences of sum-zero coordinates).
  for (auto [t, r, radius] : {std::tuple{'A', 2, 12}, {'C', 2, 6}, {'C', 3, 6}}) {
    auto g = group(t, r);
    const auto& d = g.datum();
    std::size_t tested = 0;
    for (const auto& mu : box(d.dimension(), radius)) {
      if (!d.in_coroot_lattice(mu)) continue;
      const Coweight anti = antidominant_rep(d, mu);
      const Int value = std::abs(pairing(anti, d.two_rho()));
      if (value > 12) continue;
      ++tested;
      o.require(g.length(T(g, anti)) == value && special_dim(d, mu) == value, std::string(1, t) + to_string(mu));
    }
    o.detail << t << r << ":" << tested << " ";
  }
}

// 5. Bruhat order on antidominant translations versus antidominance order.
void bruhat_antidominance(Outcome& o) {
  auto g = group('C', 2);
  const auto& d = g.datum();
  std::vector<Coweight> anti;
  for (const auto& mu : box(2, 10))
    if (is_antidominant(d, mu) && g.length(T(g, mu)) <= 10) anti.push_back(mu);
  std::size_t pairs = 0;
  for (const auto& lam : anti)
    for (const auto& mu : anti) {
      ++pairs;
      const bool bru = g.bruhat_leq(T(g, lam), T(g, mu));
      const bool sub = oracle_bruhat(g, T(g, lam), g.reduced_word(T(g, mu)));
      const bool ad = antidominance_leq(d, lam, mu);
      o.require(bru == ad && sub == ad, to_string(lam) + " vs " + to_string(mu));
    }
  o.detail << anti.size() << " coweights, " << pairs << " pairs";
}

// 6. The type C_m family e^{-mu_p}.
void unitary_table(Outcome& o) {
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= m; ++p) {
      const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      UnitaryExample ex = unitary_example(m, p);
      const AffineWeyl& g = ex.group;
      const auto& d = g.datum();
      const Facet special = Facet::special(m);
      auto mu = [&](int i) {
        Coweight v(m, 0);
        for (int k = 0; k < i; ++k) v[k] = 1;
        return v;
      };
      o.require(ex.dim == p * (2 * m + 1 - p), tag + " dim");
      o.require(g.length(T(g, negate(mu(p)))) == ex.dim, tag + " length");

      StrataPoset poset = strata(g, T(g, negate(mu(p))), special, special);
      std::vector<Element> expect;
      for (int i = 0; i <= p; ++i) expect.push_back(T(g, negate(mu(i))));
      o.require(poset.elements == expect, tag + " strata");
      std::vector<std::pair<int, int>> chain;
      for (int i = 0; i < p; ++i) chain.emplace_back(i, i + 1);
      o.require(poset.covers == chain, tag + " linear order");
      o.require(ex.strata_count == p + 1, tag + " strata count");

      o.require(g.length(ex.w_p2) == p * (p + 1) / 2, tag + " l(w_p2)");
      o.require(min_right_rep(g, ex.w_p2, special) == ex.w_p2, tag + " w_p2 right-minimal");
      o.require(antidominant_rep(d, ex.w_p2.translation) == negate(mu(p)), tag + " w_p2 translation orbit");

      std::vector<int> q;
      for (int i = 1; i <= m; ++i)
        if (i != p) q.push_back(i);
      o.require(ex.Q_p == Facet::from_nodes(q), tag + " Q_p");
      for (int i = 1; i <= m; ++i) {
        const bool fixes = g.simple_reflection(i).finite.apply(mu(p)) == mu(p);
        o.require(fixes == ex.Q_p.contains(i), tag + " Q_p stabilizes mu_p");
      }
    }
  o.detail << "10 (m, p) pairs";
}

// 7. Resolution theorem on right-minimal elements up to length 8.
void resolution_theorem(Outcome& o) {
  std::size_t cases = 0;
  for (auto [t, r] : {std::pair{'A', 2}, {'C', 2}}) {
    auto g = group(t, r);
    Ball ball = bfs_ball(g, 9);
    std::map<std::pair<std::uint32_t, std::uint32_t>, Element> longest;
    auto brute_longest = [&](Facet p, Facet q) {
      auto key = std::pair{p.mask(), q.mask()};
      auto it = longest.find(key);
      if (it != longest.end()) return it->second;
      Element best = g.identity();
      int best_len = 0;
      for (const auto& x : parabolic_subgroup(g, p)) {
        bool minimal = true;
        for (int s : q.nodes()) minimal = minimal && oracle_length(ball, g.right_mult(x, s)) > oracle_length(ball, x);
        if (minimal && oracle_length(ball, x) > best_len) {
          best = x;
          best_len = oracle_length(ball, x);
        }
      }
      longest.emplace(key, best);
      return best;
    };
    for (const auto& f : proper_facets(g))
      for (const auto& [w, l] : ball.members()) {
        if (l > 8) continue;
        bool minimal = true;
        for (int s : f.nodes()) minimal = minimal && oracle_length(ball, g.right_mult(w, s)) > l;
        if (!minimal) continue;
        ++cases;
        const std::string tag = std::string(1, t) + std::to_string(r) + " " + format_element(g, w) + " F=" + f.to_string();
        auto steps = resolutive_sequence(g, w, f);
        int total = 0;
        Element prod = g.identity();
        for (const auto& s : steps) {
          total += g.length(s.factor);
          prod = g.multiply(prod, s.factor);
          o.require(s.factor == brute_longest(s.P, s.Q), tag + " longest factor");
        }
        o.require(total == l, tag + " length additivity");
        o.require(prod == w, tag + " product");
        o.require(bott_samelson_dim(g, steps) == l, tag + " Bott-Samelson dim");
      }
  }
  o.detail << cases << " (w, F) cases";
}

// 8. Quasi-minuscule example in affine A2.
void ngo_polo(Outcome& o) {
  auto g = group('A', 2);
  auto steps = resolutive_sequence(g, T(g, negate(g.datum().highest_coroot())), F({1, 2}));
  o.require(steps.size() == 2, "two steps");
  if (steps.size() != 2) return;
  o.require(steps[0].P == F({1, 2}) && steps[1].P == F({0}), "P sequence");
  o.require(steps[0].Q == Facet{} && steps[1].Q == Facet{}, "Q sequence");
  o.require(steps[0].factor == W(g, {1, 2, 1}) && steps[1].factor == g.simple_reflection(0), "factors");
  o.detail << "P=(" << steps[0].P.to_string() << ")(" << steps[1].P.to_string() << ") factors "
           << format_element(g, steps[0].factor) << " " << format_element(g, steps[1].factor);
}

// 9. CLI golden files and --verify.
void cli_golden(Outcome& o) {
  for (const auto& gc : golden_cases()) {
    auto a = run_cli(gc.args), b = run_cli(gc.args);
    o.require(a.code == 0, std::string(gc.file) + " exit code");
    o.require(a.out == b.out, std::string(gc.file) + " determinism");
    o.require(a.out == read_file(std::string(AFFWEYL_GOLDEN_DIR) + "/" + gc.file), std::string(gc.file) + " golden");
  }
  std::size_t n = 0;
  for (const auto& cmd : verify_suite()) {
    ++n;
    auto r = run_cli(cmd);
    std::string joined;
    for (const auto& a : cmd) joined += a + " ";
    o.require(r.code == 0, "verify: " + joined + r.err);
  }
  o.detail << golden_cases().size() << " golden files, " << n << " verified commands";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"length formula equals BFS length (A1, A2, C2, C3; l <= 8)", length_formula},
      {"Bruhat order equals subword oracle (A2, C2; l <= 6)", bruhat_subword},
      {"max-min rep / root count / exhaustive max-min agree (C2; l <= 6; all facet pairs)", maxmin_triple},
      {"antidominant translation length equals |<mu, 2rho>| (A2, C2, C3; <= 12)", translation_dims},
      {"Bruhat order equals antidominance order on translations (C2; l <= 10)", bruhat_antidominance},
      {"type C_m table e^{-mu_p} (m <= 4)", unitary_table},
      {"resolutive sequences (A2, C2; l <= 8; all proper F)", resolution_theorem},
      {"quasi-minuscule resolution in affine A2", ngo_polo},
      {"CLI golden outputs and --verify", cli_golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.detail.str() << "] " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s";
    if (!o.ok) std::cout << " first failure: " << o.first_failure;
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << "\n";
  return failed ? 1 : 0;
}
