#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "affweyl/error.hpp"
#include "affweyl/oracle.hpp"
#include "affweyl/resolution.hpp"
#include "affweyl/schubert.hpp"
#include "affweyl/serialize.hpp"

namespace affweyl::cli {

namespace {

constexpr int kMaxBound = 40;
constexpr int kBallVerifyRadius = 8;
constexpr int kSubwordVerifyLength = 16;

struct CliConfig {
  std::string cartan_type = "C";
  int rank = 2;
  std::string left = "none";
  std::string right = "none";
  std::string element;
  std::string other;
  std::string side = "right";
  int length_bound = 6;
  std::string output = "text";
  bool verify = false;
  int m = 0;
  int p = 0;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Context {
 public:
  Context(const CliConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg),
        out_(out),
        err_(err),
        group_(CartanDatum::build(cfg.cartan_type.size() == 1 ? cfg.cartan_type[0] : '?', cfg.rank)),
        left_(Facet::parse(cfg.left)),
        right_(Facet::parse(cfg.right)) {
    require_proper(group_, left_);
    require_proper(group_, right_);
  }

  const AffineWeyl& group() const { return group_; }
  const CliConfig& cfg() const { return cfg_; }
  Facet left() const { return left_; }
  Facet right() const { return right_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  Element element() const { return parse_required(cfg_.element, "--element"); }
  Element other() const { return parse_required(cfg_.other, "--other"); }

  bool json() const { return cfg_.output == "json"; }
  bool dot() const { return cfg_.output == "dot"; }
  bool verifying() const { return cfg_.verify; }

  void check(bool ok, const std::string& what) {
    if (!ok) {
      err_ << "verify: MISMATCH " << what << "\n";
      failed_ = true;
    }
  }
  void skipped(const std::string& what) { err_ << "verify: skipped " << what << "\n"; }

  void finish() {
    if (!cfg_.verify) return;
    if (failed_) throw VerifyFailure("oracle cross-check failed");
    err_ << "verify: ok\n";
  }

  std::string fmt(const Element& x) const { return format_element(group_, x); }

  void emit_json(const nlohmann::json& j) { out_ << j.dump() << "\n"; }

  void verify_length(const Element& x, int claimed) {
    Element plain = x;
    plain.omega.clear();
    if (claimed <= kBallVerifyRadius) {
      const Ball ball = bfs_ball(group_, claimed);
      check(ball.contains(plain) && oracle_length(ball, plain) == claimed,
            "BFS length of " + fmt(x) + " differs from " + std::to_string(claimed));
    } else {
      check(oracle_inversion_count(group_, plain) == claimed,
            "inversion count of " + fmt(x) + " differs from " + std::to_string(claimed));
    }
  }

  void verify_maxmin(const Element& w, Facet left, Facet right, const Element& rep, int value) {
    const MaxMinResult r = oracle_maxmin(group_, w, left, right);
    check(r.element == rep, "max-min representative of " + fmt(w) + " is " + fmt(r.element));
    check(r.value == value, "max-min length of " + fmt(w) + " is " + std::to_string(r.value));
  }

 private:
  Element parse_required(const std::string& text, const char* flag) const {
    if (text.empty()) throw InvalidArgument(std::string("missing required option ") + flag);
    return parse_element(group_, text);
  }

  const CliConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  AffineWeyl group_;
  Facet left_;
  Facet right_;
  bool failed_ = false;
};

void print_scalar(Context& ctx, const char* key, const nlohmann::json& value) {
  if (ctx.json())
    ctx.emit_json({{"element", ctx.fmt(ctx.element())}, {key, value}});
  else
    ctx.out() << value.dump() << "\n";
}

void cmd_length(Context& ctx) {
  const Element x = ctx.element();
  const int l = ctx.group().length(x);
  print_scalar(ctx, "length", l);
  if (ctx.verifying()) ctx.verify_length(x, l);
}

void cmd_word(Context& ctx) {
  const Element x = ctx.element();
  const Word w = ctx.group().reduced_word(x);
  if (ctx.json())
    ctx.emit_json({{"element", format_word(w)}, {"length", static_cast<int>(w.size())}, {"word", w}});
  else
    ctx.out() << format_word(w) << "\n";
  if (ctx.verifying()) {
    ctx.check(ctx.group().from_word(w) == x, "reduced word does not evaluate to the element");
    ctx.verify_length(x, static_cast<int>(w.size()));
  }
}

void cmd_mult(Context& ctx) {
  const Element x = ctx.element(), y = ctx.other();
  const Element xy = ctx.group().multiply(x, y);
  if (ctx.json())
    ctx.emit_json({{"length", ctx.group().length(xy)}, {"product", ctx.fmt(xy)}});
  else
    ctx.out() << ctx.fmt(xy) << "\n";
  if (ctx.verifying()) {
    if (x.omega.empty() && y.omega.empty()) {
      Word w = ctx.group().reduced_word(x);
      const Word wy = ctx.group().reduced_word(y);
      w.insert(w.end(), wy.begin(), wy.end());
      ctx.check(ctx.group().from_word(w) == xy, "word concatenation disagrees with the product");
    } else {
      ctx.skipped("word check for elements with omega labels");
    }
  }
}

void cmd_bruhat(Context& ctx) {
  const Element u = ctx.element(), w = ctx.other();
  const bool leq = ctx.group().bruhat_leq(u, w);
  if (ctx.json())
    ctx.emit_json({{"leq", leq}, {"lower", ctx.fmt(u)}, {"upper", ctx.fmt(w)}});
  else
    ctx.out() << (leq ? "true" : "false") << "\n";
  if (ctx.verifying()) {
    if (!u.omega.empty() || !w.omega.empty()) {
      ctx.skipped("subword check for elements with omega labels");
    } else if (ctx.group().length(w) <= kSubwordVerifyLength) {
      ctx.check(oracle_bruhat(ctx.group(), u, ctx.group().reduced_word(w)) == leq,
                "subword oracle disagrees with the Bruhat test");
    } else {
      ctx.skipped("subword check (upper element too long)");
    }
  }
}

void verify_min_rep(Context& ctx, const Element& w, Facet f, Side side, const Element& rep) {
  Element best = w;
  int best_len = ctx.group().length(w);
  for (const auto& v : parabolic_subgroup(ctx.group(), f)) {
    Element x = side == Side::Right ? ctx.group().multiply(w, v) : ctx.group().multiply(v, w);
    const int l = ctx.group().length(x);
    if (l < best_len) {
      best = std::move(x);
      best_len = l;
    }
  }
  ctx.check(best == rep, "exhaustive coset minimum is " + ctx.fmt(best));
}

void cmd_min_rep(Context& ctx) {
  const Element w = ctx.element();
  const bool right = ctx.cfg().side == "right";
  const Facet f = right ? ctx.right() : ctx.left();
  const Element rep = right ? min_right_rep(ctx.group(), w, f) : min_left_rep(ctx.group(), w, f);
  if (ctx.json())
    ctx.emit_json({{"facet", facet_to_json(f)}, {"length", ctx.group().length(rep)}, {"rep", ctx.fmt(rep)},
                   {"side", ctx.cfg().side}});
  else
    ctx.out() << ctx.fmt(rep) << "\n";
  if (ctx.verifying()) verify_min_rep(ctx, w, f, right ? Side::Right : Side::Left, rep);
}

void cmd_maxmin_rep(Context& ctx) {
  const Element w = ctx.element();
  const Element rep = maxmin_rep(ctx.group(), w, ctx.left(), ctx.right());
  const int l = ctx.group().length(rep);
  if (ctx.json())
    ctx.emit_json({{"length", l}, {"rep", ctx.fmt(rep)}});
  else
    ctx.out() << ctx.fmt(rep) << "\n";
  if (ctx.verifying()) ctx.verify_maxmin(w, ctx.left(), ctx.right(), rep, l);
}

void cmd_wald_length(Context& ctx) {
  const Element w = ctx.element();
  const int n = waldspurger_length(ctx.group(), w, ctx.left(), ctx.right());
  if (ctx.json())
    ctx.emit_json({{"element", ctx.fmt(w)}, {"wald_length", n}});
  else
    ctx.out() << n << "\n";
  if (ctx.verifying()) {
    const MaxMinResult r = oracle_maxmin(ctx.group(), w, ctx.left(), ctx.right());
    ctx.check(r.value == n, "max-min oracle gives " + std::to_string(r.value));
  }
}

void cmd_dim(Context& ctx) {
  const Element w = ctx.element();
  const int d = schubert_dim(ctx.group(), w, ctx.left(), ctx.right());
  if (ctx.json())
    ctx.emit_json({{"dim", d}, {"element", ctx.fmt(w)}});
  else
    ctx.out() << d << "\n";
  if (ctx.verifying()) {
    const Element rep = maxmin_rep(ctx.group(), w, ctx.left(), ctx.right());
    ctx.verify_maxmin(w, ctx.left(), ctx.right(), rep, d);
    ctx.check(waldspurger_length(ctx.group(), w, ctx.left(), ctx.right()) == d, "root count differs");
  }
}

void cmd_strata(Context& ctx) {
  const Element w = ctx.element();
  const StrataPoset poset = strata(ctx.group(), w, ctx.left(), ctx.right());
  if (ctx.dot()) {
    ctx.out() << strata_to_dot(ctx.group(), poset);
  } else if (ctx.json()) {
    ctx.emit_json(strata_to_json(ctx.group(), poset));
  } else {
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
      ctx.out() << ctx.fmt(poset.elements[i]) << " " << poset.dims[i] << "\n";
    for (const auto& [lo, hi] : poset.covers)
      ctx.out() << ctx.fmt(poset.elements[lo]) << " < " << ctx.fmt(poset.elements[hi]) << "\n";
  }
  if (ctx.verifying()) {
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
      ctx.verify_maxmin(poset.elements[i], ctx.left(), ctx.right(), poset.elements[i], poset.dims[i]);
    const Element& top = poset.elements.back();
    if (ctx.group().length(top) <= kSubwordVerifyLength) {
      const auto below = subword_products(ctx.group(), ctx.group().reduced_word(top));
      for (const auto& e : poset.elements) ctx.check(below.contains(e), ctx.fmt(e) + " is not below the top");
    } else {
      ctx.skipped("subword check of strata (top element too long)");
    }
  }
}

void cmd_resolve(Context& ctx) {
  const Element input = ctx.element();
  const Element w = min_right_rep(ctx.group(), input, ctx.right());
  const bool normalized = !(w == input);
  if (normalized)
    ctx.err() << "note: normalized " << ctx.fmt(input) << " to its minimal representative " << ctx.fmt(w)
              << " modulo W_{" << ctx.right().to_string() << "}\n";
  const auto steps = resolutive_sequence(ctx.group(), w, ctx.right());
  if (ctx.json()) {
    nlohmann::json j = resolution_to_json(ctx.group(), steps);
    j["element"] = ctx.fmt(w);
    j["normalized"] = normalized;
    ctx.emit_json(j);
  } else {
    for (const auto& s : steps)
      ctx.out() << "P={" << s.P.to_string() << "} Q={" << s.Q.to_string() << "} factor=" << ctx.fmt(s.factor)
                << " length=" << ctx.group().length(s.factor) << "\n";
    ctx.out() << "total_length=" << ctx.group().length(w)
              << " bott_samelson_dim=" << bott_samelson_dim(ctx.group(), steps) << "\n";
  }
  if (ctx.verifying()) {
    ctx.check(product_of_factors(ctx.group(), steps) == w, "factors do not multiply to w");
    int total = 0;
    for (const auto& s : steps) {
      total += ctx.group().length(s.factor);
      ctx.check(longest_rep(ctx.group(), s.P, s.Q) == s.factor,
                "factor " + ctx.fmt(s.factor) + " is not the longest element of (W_P)^Q");
    }
    ctx.check(total == ctx.group().length(w), "factor lengths do not add up");
    ctx.check(bott_samelson_dim(ctx.group(), steps) == ctx.group().length(w), "Bott-Samelson dimension differs");
  }
}

void cmd_unitary(Context& ctx) {
  const UnitaryExample ex = unitary_example(ctx.cfg().m, ctx.cfg().p);
  const int m = ex.m, p = ex.p;
  if (ctx.json()) {
    ctx.emit_json(unitary_to_json(ex));
  } else {
    ctx.out() << "m=" << m << " p=" << p << " mu_p=" << to_string(ex.mu_p) << "\n"
              << "dim=" << ex.dim << "\n"
              << "Q_p={" << ex.Q_p.to_string() << "}\n"
              << "w_p2=" << ctx.fmt(ex.w_p2) << " length=" << ex.group.length(ex.w_p2) << "\n"
              << "strata_count=" << ex.strata_count << "\n";
  }
  if (ctx.verifying()) {
    const AffineWeyl& g = ex.group;
    const Facet special = Facet::special(m);
    const Element w = g.from_translation(negate(ex.mu_p));
    ctx.check(ex.dim == p * (2 * m + 1 - p), "dimension formula");
    ctx.check(oracle_maxmin(g, w, special, special).value == ex.dim, "max-min oracle dimension");
    ctx.check(g.length(ex.w_p2) == p * (p + 1) / 2, "length of w_{p,2}");
    ctx.check(g.from_word(unitary_w_p2_word(p)) == ex.w_p2, "w_{p,2} differs from its block product");
    ctx.check(ex.strata_count == p + 1, "number of strata");
    ctx.check(product_of_factors(g, ex.steps) == w, "factors do not multiply to e^{-mu_p}");
  }
}

void cmd_enumerate(Context& ctx) {
  const int bound = ctx.cfg().length_bound;
  const auto reps = enumerate_reps(ctx.group(), ctx.left(), ctx.right(), bound);
  if (ctx.json()) {
    nlohmann::json elems = nlohmann::json::array(), lens = nlohmann::json::array();
    for (const auto& r : reps) {
      elems.push_back(ctx.fmt(r));
      lens.push_back(ctx.group().length(r));
    }
    ctx.emit_json({{"bound", bound}, {"lengths", lens}, {"reps", elems}});
  } else {
    for (const auto& r : reps) ctx.out() << ctx.fmt(r) << " " << ctx.group().length(r) << "\n";
  }
  if (ctx.verifying()) {
    const Ball ball = bfs_ball(ctx.group(), bound);
    std::size_t expected = 0;
    for (const auto& x : ball.ordered()) {
      const MaxMinResult r = oracle_maxmin(ctx.group(), x, ctx.left(), ctx.right());
      if (r.element == x) ++expected;
    }
    ctx.check(expected == reps.size(), "BFS oracle finds " + std::to_string(expected) + " representatives");
  }
}

void add_common(CLI::App* sub, CliConfig& cfg, bool element, bool facets) {
  sub->add_option("--type", cfg.cartan_type, "Root system type (A, B, C, D)")->capture_default_str();
  sub->add_option("--rank", cfg.rank, "Rank m")->capture_default_str();
  sub->add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  sub->add_flag("--verify", cfg.verify, "Cross-check against brute-force oracles");
  if (element) sub->add_option("-e,--element", cfg.element, "Element, e.g. w:0,1,0 or t:-1,0|id");
  if (facets) {
    sub->add_option("--left", cfg.left, "Left facet nodes, e.g. 1,2 or none")->capture_default_str();
    sub->add_option("--right", cfg.right, "Right facet nodes, e.g. 1,2 or none")->capture_default_str();
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Combinatorics of affine Weyl groups, parahoric double cosets and Schubert varieties", "affweyl"};
  app.require_subcommand(1);

  std::map<std::string, std::function<void(Context&)>> commands;
  auto sub = [&](const char* name, const char* help, bool element, bool facets, std::function<void(Context&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, cfg, element, facets);
    commands[name] = std::move(fn);
    return s;
  };
  sub("length", "Length of an element", true, false, cmd_length);
  sub("word", "Reduced word of an element", true, false, cmd_word);
  sub("mult", "Product of --element and --other", true, false, cmd_mult)
      ->add_option("--other", cfg.other, "Right factor");
  sub("bruhat", "Whether --element <= --other in Bruhat order", true, false, cmd_bruhat)
      ->add_option("--other", cfg.other, "Upper element");
  sub("min-rep", "Minimal coset representative", true, true, cmd_min_rep)
      ->add_option("--side", cfg.side, "right: w^F with F=--right; left: ^F w with F=--left")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  sub("maxmin-rep", "Max-min double coset representative", true, true, cmd_maxmin_rep);
  sub("wald-length", "Root-counting length of the max-min representative", true, true, cmd_wald_length);
  sub("dim", "Dimension of the (left, right) Schubert variety", true, true, cmd_dim);
  sub("strata", "Stratification poset of the Schubert variety", true, true, cmd_strata);
  sub("resolve", "Resolutive sequence for the (B, P_right) Schubert variety", true, true, cmd_resolve);
  CLI::App* unitary = sub("unitary", "Type C_m example: e^{-mu_p}", false, false, cmd_unitary);
  unitary->add_option("m", cfg.m, "Rank m")->required();
  unitary->add_option("p", cfg.p, "1 <= p <= m")->required();
  sub("enumerate", "Max-min representatives up to a length bound", false, true, cmd_enumerate)
      ->add_option("-L,--bound", cfg.length_bound, "Length bound")
      ->check(CLI::Range(0, kMaxBound))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (cfg.output == "dot" && name != "strata") {
    err << "error: --output dot is only available for 'strata'\n";
    return kExitUsage;
  }
  if (name == "unitary") {
    cfg.cartan_type = "C";
    cfg.rank = std::max(cfg.m, 1);
  }
  try {
    Context ctx(cfg, out, err);
    commands.at(name)(ctx);
    ctx.finish();
  } catch (const VerifyFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace affweyl::cli
