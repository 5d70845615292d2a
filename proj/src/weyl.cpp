#include "affweyl/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "affweyl/error.hpp"

namespace affweyl {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

IntMatrix reflection_matrix(const RootVec& root, const RootVec& coroot) {
  const int n = static_cast<int>(root.size());
  IntMatrix m = IntMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) -= coroot[r] * root[c];
  return m;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<Int> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<Int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(pos, comma - pos));
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidArgument("cannot parse integer '" + std::string(tok) + "' in " + std::string(context));
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t seed = 0;
  for (Int v : x.translation) hash_combine(seed, std::hash<Int>{}(v));
  for (Int v : x.finite.data()) hash_combine(seed, std::hash<Int>{}(v));
  for (int v : x.omega) hash_combine(seed, std::hash<int>{}(v));
  return seed;
}

bool is_identity_perm(const NodePerm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

NodePerm compose(const NodePerm& a, const NodePerm& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  NodePerm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return is_identity_perm(r) ? NodePerm{} : r;
}

NodePerm invert(const NodePerm& p) {
  NodePerm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

AffineWeyl::AffineWeyl(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.dimension();
  for (int i = 0; i <= datum_.rank(); ++i) {
    RootVec a = datum_.node_root(i);
    Element s{Coweight(n, 0), reflection_matrix(a, datum_.coroot_of(a)), {}};
    // s_0 = t_{theta^vee} s_theta
    if (i == 0) s.translation = datum_.highest_coroot();
    simple_.push_back(std::move(s));
  }
}

Element AffineWeyl::identity() const {
  const int n = datum_.dimension();
  return Element{Coweight(n, 0), IntMatrix::identity(n), {}};
}

Element AffineWeyl::simple_reflection(int i) const {
  if (i < 0 || i > rank())
    throw InvalidArgument("simple reflection index " + std::to_string(i) + " out of range 0.." +
                          std::to_string(rank()));
  return simple_[i];
}

Element AffineWeyl::from_translation(const Coweight& mu) const {
  if (static_cast<int>(mu.size()) != datum_.dimension())
    throw InvalidArgument("translation " + to_string(mu) + " has wrong dimension, expected " +
                          std::to_string(datum_.dimension()));
  if (!datum_.in_coroot_lattice(mu))
    throw InvalidArgument("translation " + to_string(mu) + " is not in the coroot lattice");
  return Element{mu, IntMatrix::identity(datum_.dimension()), {}};
}

Element AffineWeyl::from_word(const Word& word) const {
  Element x = identity();
  for (int i : word) x = right_mult(x, i);
  return x;
}

bool AffineWeyl::in_finite_weyl_group(const IntMatrix& v) const {
  if (v.size() != datum_.dimension()) return false;
  for (const auto& r : datum_.roots())
    if (!datum_.is_root(v.apply(r))) return false;
  // Strip simple reflections until v fixes the positive chamber.
  IntMatrix cur = v;
  for (int guard = 0; guard <= datum_.num_positive(); ++guard) {
    int found = -1;
    for (int i = 1; i <= rank() && found < 0; ++i)
      if (!datum_.is_positive(cur.apply(datum_.simple_roots()[i - 1]))) found = i;
    if (found < 0) return cur.is_identity();
    cur = cur * simple_[found].finite;
  }
  return false;
}

bool AffineWeyl::is_diagram_automorphism(const NodePerm& omega) const {
  if (omega.empty()) return true;
  const int n = num_nodes();
  if (static_cast<int>(omega.size()) != n) return false;
  std::vector<int> seen(n, 0);
  for (int x : omega) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (datum_.coxeter_order(i, j) != datum_.coxeter_order(omega[i], omega[j])) return false;
  return true;
}

Element AffineWeyl::from_parts(Coweight lambda, IntMatrix v, NodePerm omega) const {
  if (static_cast<int>(lambda.size()) != datum_.dimension() || !datum_.in_coroot_lattice(lambda))
    throw InvalidArgument("translation " + to_string(lambda) + " is not in the coroot lattice");
  if (!in_finite_weyl_group(v)) throw InvalidArgument("finite part is not an element of W_0");
  if (!is_diagram_automorphism(omega))
    throw InvalidArgument("omega label is not an automorphism of the affine diagram");
  if (is_identity_perm(omega)) omega.clear();
  return Element{std::move(lambda), std::move(v), std::move(omega)};
}

Element AffineWeyl::from_omega(NodePerm omega) const {
  Element x = identity();
  if (!is_diagram_automorphism(omega))
    throw InvalidArgument("omega label is not an automorphism of the affine diagram");
  if (!is_identity_perm(omega)) x.omega = std::move(omega);
  return x;
}

// Returns p^-1 a p for a plain element a, using p^-1 s_i p = s_{p^-1(i)}.
// With inverse_side the roles flip: p a p^-1.
Element AffineWeyl::conjugate_by_omega(const Element& a, const NodePerm& p, bool inverse_side) const {
  if (p.empty()) return a;
  const NodePerm q = inverse_side ? p : invert(p);
  Word w = reduced_word(a);
  for (int& letter : w) letter = q[letter];
  return from_word(w);
}

Element AffineWeyl::multiply(const Element& x, const Element& y) const {
  Element xa{x.translation, x.finite, {}};
  if (!y.omega.empty()) xa = conjugate_by_omega(xa, y.omega, false);
  Element r;
  r.translation = add(xa.translation, xa.finite.apply(y.translation));
  r.finite = xa.finite * y.finite;
  r.omega = compose(x.omega, y.omega);
  return r;
}

Element AffineWeyl::inverse(const Element& x) const {
  Element r;
  r.finite = x.finite.transpose();  // W_0 acts orthogonally
  r.translation = negate(r.finite.apply(x.translation));
  if (!x.omega.empty()) {
    r = conjugate_by_omega(r, x.omega, true);
    r.omega = invert(x.omega);
  }
  return r;
}

Element AffineWeyl::left_mult(int i, const Element& x) const {
  // s_i omega a = omega s_{omega^-1(i)} a
  const int j = x.omega.empty() ? i : invert(x.omega)[i];
  const Element& s = simple_reflection(j);
  Element r;
  r.translation = add(s.translation, s.finite.apply(x.translation));
  r.finite = s.finite * x.finite;
  r.omega = x.omega;
  return r;
}

Element AffineWeyl::right_mult(const Element& x, int i) const {
  const Element& s = simple_reflection(i);
  Element r;
  r.translation = add(x.translation, x.finite.apply(s.translation));
  r.finite = x.finite * s.finite;
  r.omega = x.omega;
  return r;
}

int AffineWeyl::length(const Element& x) const {
  Int total = 0;
  for (const auto& a : datum_.positive_roots()) {
    const Int c = dot(x.translation, a);
    const bool inverted = !datum_.is_positive(x.finite.apply_transpose(a));
    total += std::abs(inverted ? c - 1 : c);
  }
  return static_cast<int>(total);
}

bool AffineWeyl::is_descent(const Element& x, int i, Side side) const {
  const Element y = side == Side::Left ? left_mult(i, x) : right_mult(x, i);
  return length(y) < length(x);
}

std::vector<int> AffineWeyl::descents(const Element& x, Side side) const {
  std::vector<int> out;
  const int lx = length(x);
  for (int i = 0; i <= rank(); ++i) {
    const Element y = side == Side::Left ? left_mult(i, x) : right_mult(x, i);
    if (length(y) < lx) out.push_back(i);
  }
  return out;
}

void AffineWeyl::require_plain(const Element& x, const char* what) const {
  if (!x.omega.empty())
    throw InvalidArgument(std::string(what) + " requires an element with trivial omega label");
}

Word AffineWeyl::reduced_word(const Element& x) const {
  require_plain(x, "reduced_word");
  Word w;
  Element cur = x;
  int l = length(cur);
  while (l > 0) {
    bool stepped = false;
    for (int i = 0; i <= rank(); ++i) {
      Element y = left_mult(i, cur);
      const int ly = length(y);
      if (ly < l) {
        w.push_back(i);
        cur = std::move(y);
        l = ly;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InvariantViolation("element of positive length without a left descent");
  }
  if (!(cur == identity())) throw InvariantViolation("length-zero element is not the identity");
  return w;
}

bool AffineWeyl::bruhat_leq(const Element& u_in, const Element& w_in) const {
  if (u_in.omega != w_in.omega) return false;
  Element u = u_in, w = w_in;
  int lu = length(u), lw = length(w);
  while (true) {
    if (lu > lw) return false;
    if (lu == 0) return true;  // same omega label, u = omega
    // lw > 0 here, so w has a left descent s.
    int s = -1;
    for (int i = 0; i <= rank() && s < 0; ++i)
      if (length(left_mult(i, w)) < lw) s = i;
    if (s < 0) throw InvariantViolation("element of positive length without a left descent");
    w = left_mult(s, w);
    --lw;
    Element su = left_mult(s, u);
    const int lsu = length(su);
    if (lsu < lu) {
      u = std::move(su);
      lu = lsu;
    }
  }
}

AffineRoot AffineWeyl::act(const Element& w, const AffineRoot& alpha) const {
  require_plain(w, "affine root action");
  const RootVec b = w.finite.apply(datum_.roots().at(alpha.root));
  auto idx = datum_.root_index(b);
  if (!idx) throw InvariantViolation("finite part does not permute the roots");
  return AffineRoot{*idx, alpha.offset - dot(w.translation, b)};
}

IntVec AffineWeyl::apply_to_point(const Element& w, std::span<const Int> numerators, Int denominator) const {
  require_plain(w, "point action");
  return add(w.finite.apply(numerators), scale(w.translation, denominator));
}

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 2) != "w:") throw InvalidArgument("word must start with 'w:': " + std::string(text));
  Word w;
  for (Int v : parse_int_list(text.substr(2), "word")) w.push_back(static_cast<int>(v));
  return w;
}

Element parse_element(const AffineWeyl& group, std::string_view text) {
  text = trim(text);
  const std::string original(text);
  if (text == "id" || text == "e") return group.identity();
  auto check_word = [&](const Word& w) {
    for (int i : w)
      if (i < 0 || i > group.rank())
        throw InvalidArgument("letter " + std::to_string(i) + " out of range in '" + original + "'");
  };
  if (text.starts_with("w:")) {
    Word w = parse_word(text);
    check_word(w);
    return group.from_word(w);
  }
  if (!text.starts_with("t:"))
    throw InvalidArgument("element must be 'w:...' or 't:...|...', got '" + original + "'");

  std::vector<std::string_view> parts;
  std::size_t pos = 2;
  while (true) {
    std::size_t bar = text.find('|', pos);
    parts.push_back(text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw InvalidArgument("translation form is 't:<coords>|id' or 't:<coords>|w:<word>', got '" + original + "'");

  Coweight lambda = parse_int_list(parts[0], "translation");
  if (static_cast<int>(lambda.size()) != group.datum().dimension())
    throw InvalidArgument("translation in '" + original + "' needs " +
                          std::to_string(group.datum().dimension()) + " coordinates");
  IntMatrix v = IntMatrix::identity(group.datum().dimension());
  std::string_view fin = trim(parts[1]);
  if (fin != "id") {
    Word w = parse_word(fin);
    check_word(w);
    for (int i : w)
      if (i == 0) throw InvalidArgument("finite part of '" + original + "' may not use the affine letter 0");
    v = group.from_word(w).finite;
  }
  NodePerm omega;
  if (parts.size() == 3) {
    std::string_view o = trim(parts[2]);
    if (!o.starts_with("o:")) throw InvalidArgument("omega label must be 'o:<perm>' in '" + original + "'");
    for (Int x : parse_int_list(o.substr(2), "omega")) omega.push_back(static_cast<int>(x));
  }
  return group.from_parts(std::move(lambda), std::move(v), std::move(omega));
}

std::string format_word(const Word& word) {
  std::string s = "w:";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word[i]);
  }
  return s;
}

std::string format_element(const AffineWeyl& group, const Element& x) {
  if (x.omega.empty()) {
    const Word w = group.reduced_word(x);
    return w.empty() ? std::string("id") : format_word(w);
  }
  Element fin = group.identity();
  fin.finite = x.finite;
  std::string s = "t:";
  for (std::size_t i = 0; i < x.translation.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.translation[i]);
  }
  s += '|';
  s += fin.finite.is_identity() ? std::string("id") : format_word(group.reduced_word(fin));
  s += "|o:";
  for (std::size_t i = 0; i < x.omega.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.omega[i]);
  }
  return s;
}

}  // namespace affweyl
