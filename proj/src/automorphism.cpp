#include "vqn/automorphism.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace vqn {

struct Automorphism::Node {
  Form form = Form::identity;
  int dim = 0;
  int phi_index = 0;
  std::shared_ptr<const Node> a;  // phi inner / sigma0 half0 / compose first
  std::shared_ptr<const Node> b;  // sigma0 half1 / compose second
  std::vector<std::uint64_t> table;
};

namespace {

Label apply_node(const Automorphism::Node& n, Label x) {
  switch (n.form) {
    case Automorphism::Form::identity:
      return x;
    case Automorphism::Form::sigma1:
      return x.with_bit_flipped(n.dim);
    case Automorphism::Form::sigma0: {
      const bool top = x.bit(n.dim);
      const Label rest = x.low_bits(n.dim - 1);
      return apply_node(top ? *n.b : *n.a, rest).with_top_bit(top);
    }
    case Automorphism::Form::phi: {
      const int m = n.dim;  // transformed bits sit at positions m and m-1
      bool hi = x.bit(m);
      bool lo = x.bit(m - 1);
      if (n.phi_index & 2) hi = !hi;
      if (n.phi_index & 1) lo = !lo;
      return apply_node(*n.a, x.low_bits(m - 2))
          .with_top_bit(lo)
          .with_top_bit(hi);
    }
    case Automorphism::Form::compose:
      return apply_node(*n.a, apply_node(*n.b, x));
    case Automorphism::Form::table:
      return Label(n.table[x.value], n.dim);
  }
  throw std::logic_error("apply: corrupt form");
}

void render(const Automorphism::Node& n, std::string& out) {
  switch (n.form) {
    case Automorphism::Form::identity:
      out += "identity(" + std::to_string(n.dim) + ")";
      return;
    case Automorphism::Form::sigma1:
      out += "sigma1(" + std::to_string(n.dim) + ")";
      return;
    case Automorphism::Form::sigma0:
      out += "sigma0(" + std::to_string(n.dim) + ", ";
      render(*n.a, out);
      out += ", ";
      render(*n.b, out);
      out += ")";
      return;
    case Automorphism::Form::phi:
      out += "phi_" + std::to_string(n.phi_index) + "[";
      render(*n.a, out);
      out += "]";
      return;
    case Automorphism::Form::compose:
      out += "compose(";
      render(*n.a, out);
      out += ", ";
      render(*n.b, out);
      out += ")";
      return;
    case Automorphism::Form::table:
      out += "table:";
      for (std::uint64_t v : n.table) {
        out += ' ';
        out += Label(v, n.dim).to_string();
      }
      return;
  }
}

bool nodes_equal(const Automorphism::Node& x, const Automorphism::Node& y) {
  if (&x == &y) return true;  // shared subtrees compare in constant time
  if (x.form != y.form || x.dim != y.dim) return false;
  switch (x.form) {
    case Automorphism::Form::identity:
    case Automorphism::Form::sigma1:
      return true;
    case Automorphism::Form::phi:
      return x.phi_index == y.phi_index && nodes_equal(*x.a, *y.a);
    case Automorphism::Form::sigma0:
    case Automorphism::Form::compose:
      return nodes_equal(*x.a, *y.a) && nodes_equal(*x.b, *y.b);
    case Automorphism::Form::table:
      return x.table == y.table;
  }
  return false;
}

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Automorphism parse() {
    skip_ws();
    Automorphism a = parse_value();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing characters");
    return a;
  }

 private:
  Automorphism parse_value() {
    skip_ws();
    if (consume("identity(")) {
      const int n = parse_int();
      expect(')');
      return Automorphism::identity(n);
    }
    if (consume("sigma1(")) {
      const int n = parse_int();
      expect(')');
      return Automorphism::sigma1(n);
    }
    if (consume("sigma0(")) {
      const int n = parse_int();
      separator();
      const Automorphism h0 = parse_value();
      separator();
      const Automorphism h1 = parse_value();
      expect(')');
      // Reconstructs whatever was serialized, including pairings built via
      // sigma0_unchecked; dimensions are still validated.
      return Automorphism::sigma0_unchecked(n, h0, h1);
    }
    if (consume("compose(")) {
      const Automorphism first = parse_value();
      separator();
      const Automorphism second = parse_value();
      expect(')');
      return compose(first, second);
    }
    if (consume("phi_")) {
      const int index = parse_int();
      expect('[');
      const Automorphism inner = parse_value();
      expect(']');
      return Automorphism::phi_lift(index, inner, inner.dim() + 3);
    }
    if (consume("table:")) {
      std::vector<std::uint64_t> image;
      int width = -1;
      while (true) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) ++pos_;
        if (pos_ == start) break;
        const Label l = Label::parse(s_.substr(start, pos_ - start));
        if (width < 0) width = l.dim;
        if (l.dim != width) fail("table labels have mixed widths");
        image.push_back(l.value);
      }
      if (width <= 0) fail("table form needs at least one label");
      return Automorphism::from_table(std::move(image), width);
    }
    fail("expected an automorphism form");
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected a number");
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (s_[i] - '0');
      if (value > 1'000'000) fail("number too large");
    }
    return value;
  }

  bool consume(std::string_view token) {
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void separator() { expect(','); }

  void skip_ws() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
            s_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("automorphism text, offset " +
                                std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Automorphism::Automorphism(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

int Automorphism::dim() const { return node_->dim; }
Automorphism::Form Automorphism::form() const { return node_->form; }

Label Automorphism::apply(Label x) const {
  if (x.dim != node_->dim)
    throw std::invalid_argument("apply: label dimension " +
                                std::to_string(x.dim) +
                                " does not match automorphism dimension " +
                                std::to_string(node_->dim));
  return apply_node(*node_, x);
}

Automorphism Automorphism::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: n must be >= 0");
  auto node = std::make_shared<Node>();
  node->form = Form::identity;
  node->dim = n;
  return Automorphism(std::move(node));
}

Automorphism Automorphism::sigma1(int n) {
  if (n < 1) throw std::invalid_argument("sigma1: n must be >= 1");
  auto node = std::make_shared<Node>();
  node->form = Form::sigma1;
  node->dim = n;
  return Automorphism(std::move(node));
}

Automorphism Automorphism::phi_lift(int index, const Automorphism& inner,
                                    int n) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument(
        "phi_lift: n must be a positive multiple of 3, got " +
        std::to_string(n));
  if (index < 0 || index > 3)
    throw std::invalid_argument("phi_lift: index must be in 0..3");
  if (inner.dim() != n - 3)
    throw std::invalid_argument("phi_lift: inner dimension must be n-3");
  auto node = std::make_shared<Node>();
  node->form = Form::phi;
  node->dim = n - 1;
  node->phi_index = index;
  node->a = inner.node_;
  return Automorphism(std::move(node));
}

Automorphism Automorphism::sigma0_unchecked(int n, const Automorphism& half0,
                                            const Automorphism& half1) {
  if (n < 1) throw std::invalid_argument("sigma0: n must be >= 1");
  if (half0.dim() != n - 1 || half1.dim() != n - 1)
    throw std::invalid_argument("sigma0: halves must have dimension n-1");
  auto node = std::make_shared<Node>();
  node->form = Form::sigma0;
  node->dim = n;
  node->a = half0.node_;
  node->b = half1.node_;
  return Automorphism(std::move(node));
}

Automorphism Automorphism::sigma0(int n, const Automorphism& half0,
                                  const Automorphism& half1) {
  if (n >= 1 && half0.dim() == n - 1 && half1.dim() == n - 1) {
    if (n % 3 != 0) {
      if (!half0.structurally_equal(half1))
        throw std::invalid_argument(
            "sigma0: halves must be the same map when n is not a multiple of "
            "3");
    } else {
      if (half0.form() != Form::phi || half1.form() != Form::phi)
        throw std::invalid_argument(
            "sigma0: halves must be phi lifts when n is a multiple of 3");
      const int i0 = half0.phi_index();
      const int i1 = half1.phi_index();
      const bool legal_pair =
          (i0 == i1 && i0 <= 1) || (i0 == 3 && i1 == 2) || (i0 == 2 && i1 == 3);
      if (!legal_pair)
        throw std::invalid_argument("sigma0: illegal phi index pair (" +
                                    std::to_string(i0) + "," +
                                    std::to_string(i1) + ")");
      if (!half0.phi_inner().structurally_equal(half1.phi_inner()))
        throw std::invalid_argument(
            "sigma0: phi lifts must share one inner automorphism");
    }
  }
  return sigma0_unchecked(n, half0, half1);
}

Automorphism Automorphism::sigma0(int n, const Automorphism& both_halves) {
  return sigma0(n, both_halves, both_halves);
}

Automorphism Automorphism::from_table(std::vector<std::uint64_t> image,
                                      int n) {
  if (n < 1 || n > 28)
    throw std::invalid_argument("from_table: n must be in 1..28");
  const std::uint64_t count = std::uint64_t{1} << n;
  if (image.size() != count)
    throw std::invalid_argument("from_table: expected " +
                                std::to_string(count) + " entries, got " +
                                std::to_string(image.size()));
  std::vector<bool> seen(count, false);
  for (std::uint64_t v : image) {
    if (v >= count)
      throw std::invalid_argument("from_table: entry out of range");
    if (seen[v])
      throw std::invalid_argument("from_table: entries are not a permutation");
    seen[v] = true;
  }
  auto node = std::make_shared<Node>();
  node->form = Form::table;
  node->dim = n;
  node->table = std::move(image);
  return Automorphism(std::move(node));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  auto node = std::make_shared<Automorphism::Node>();
  node->form = Automorphism::Form::compose;
  node->dim = a.dim();
  node->a = a.node_;
  node->b = b.node_;
  return Automorphism(std::move(node));
}

Automorphism Automorphism::inverse() const {
  switch (node_->form) {
    case Form::identity:
    case Form::sigma1:
      return *this;
    case Form::sigma0: {
      // The top bit is fixed, so inverting half-wise inverts the whole map.
      auto node = std::make_shared<Node>();
      node->form = Form::sigma0;
      node->dim = node_->dim;
      node->a = Automorphism(node_->a).inverse().node_;
      node->b = Automorphism(node_->b).inverse().node_;
      return Automorphism(std::move(node));
    }
    case Form::phi: {
      // The two bit flips are involutions acting on bits the inner map never
      // touches, so only the inner needs inverting.
      auto node = std::make_shared<Node>();
      node->form = Form::phi;
      node->dim = node_->dim;
      node->phi_index = node_->phi_index;
      node->a = Automorphism(node_->a).inverse().node_;
      return Automorphism(std::move(node));
    }
    case Form::compose:
      return compose(Automorphism(node_->b).inverse(),
                     Automorphism(node_->a).inverse());
    case Form::table: {
      std::vector<std::uint64_t> inverted(node_->table.size());
      for (std::uint64_t v = 0; v < node_->table.size(); ++v)
        inverted[node_->table[v]] = v;
      return from_table(std::move(inverted), node_->dim);
    }
  }
  throw std::logic_error("inverse: corrupt form");
}

std::vector<std::uint64_t> Automorphism::to_table(int size_cap) const {
  if (node_->dim > size_cap)
    throw std::length_error("to_table: dimension " +
                            std::to_string(node_->dim) +
                            " exceeds the size cap " + std::to_string(size_cap));
  const std::uint64_t count = std::uint64_t{1} << node_->dim;
  std::vector<std::uint64_t> out(count);
  for (std::uint64_t v = 0; v < count; ++v)
    out[v] = apply(Label(v, node_->dim)).value;
  return out;
}

std::string Automorphism::to_text() const {
  std::string out;
  render(*node_, out);
  return out;
}

Automorphism Automorphism::from_text(std::string_view text) {
  return TextParser(text).parse();
}

bool Automorphism::structurally_equal(const Automorphism& other) const {
  return nodes_equal(*node_, *other.node_);
}

int Automorphism::phi_index() const {
  if (node_->form != Form::phi)
    throw std::logic_error("phi_index: not a phi lift");
  return node_->phi_index;
}

Automorphism Automorphism::phi_inner() const {
  if (node_->form != Form::phi)
    throw std::logic_error("phi_inner: not a phi lift");
  return Automorphism(node_->a);
}

std::pair<Automorphism, Automorphism> Automorphism::sigma0_halves() const {
  if (node_->form != Form::sigma0)
    throw std::logic_error("sigma0_halves: not a half-split");
  return {Automorphism(node_->a), Automorphism(node_->b)};
}

std::pair<Automorphism, Automorphism> Automorphism::compose_parts() const {
  if (node_->form != Form::compose)
    throw std::logic_error("compose_parts: not a composition");
  return {Automorphism(node_->a), Automorphism(node_->b)};
}

std::string AutomorphismCheck::describe() const {
  if (ok) return "ok";
  if (collision)
    return "not a bijection: labels " + collision->first.to_string() +
           " and " + collision->second.to_string() + " share an image";
  if (bad_edge)
    return "edge {" + bad_edge->first.to_string() + ", " +
           bad_edge->second.to_string() + "} maps to a non-edge";
  return "failed";
}

AutomorphismCheck is_automorphism(const Automorphism& a, const Graph& vq) {
  if (vq.family() != GraphFamily::varietal || vq.dim() != a.dim())
    throw std::invalid_argument(
        "is_automorphism: graph must be the varietal hypercube of the "
        "automorphism's dimension");
  const int n = a.dim();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint32_t> image(count);
  std::vector<std::uint32_t> source(count, UINT32_MAX);
  AutomorphismCheck result;
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto img =
        static_cast<std::uint32_t>(a.apply(Label(v, n)).value);
    image[v] = img;
    if (source[img] != UINT32_MAX) {
      result.collision = {Label(source[img], n), Label(v, n)};
      return result;
    }
    source[img] = static_cast<std::uint32_t>(v);
  }
  // A bijection whose edge images stay edges maps E onto E.
  for (const auto& [u, v] : vq.edges()) {
    if (!vq.has_edge(image[u], image[v])) {
      result.bad_edge = {Label(u, n), Label(v, n)};
      return result;
    }
  }
  result.ok = true;
  return result;
}

AutomorphismCheck is_automorphism(const Automorphism& a, int size_cap) {
  if (a.dim() > size_cap)
    throw std::length_error("is_automorphism: dimension " +
                            std::to_string(a.dim()) +
                            " exceeds the size cap " +
                            std::to_string(size_cap));
  const Graph vq = build_recursive(a.dim(), size_cap);
  return is_automorphism(a, vq);
}

std::vector<Automorphism> base_automorphism_table(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument(
        "base_automorphism_table: exhaustive search is limited to n in 1..3");
  const Graph g = build_recursive(n);
  const std::uint32_t count = g.vertex_count();
  std::vector<std::uint64_t> image(count);
  std::vector<bool> used(count, false);
  std::vector<std::vector<std::uint64_t>> tables;

  const auto search = [&](auto&& self, std::uint32_t v) -> void {
    if (v == count) {
      tables.push_back(image);
      return;
    }
    for (std::uint32_t cand = 0; cand < count; ++cand) {
      if (used[cand] || g.degree(cand) != g.degree(v)) continue;
      bool consistent = true;
      for (std::uint32_t prev = 0; prev < v; ++prev) {
        if (g.has_edge(v, prev) !=
            g.has_edge(cand, static_cast<std::uint32_t>(image[prev]))) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image[v] = cand;
      used[cand] = true;
      self(self, v + 1);
      used[cand] = false;
    }
  };
  search(search, 0);

  // Ascending candidate order yields lexicographically sorted tables.
  std::vector<Automorphism> out;
  out.reserve(tables.size());
  for (auto& t : tables)
    out.push_back(Automorphism::from_table(std::move(t), n));
  return out;
}

namespace {

const std::vector<Automorphism>& cached_base_table(int n) {
  static const auto* cache = new std::array<std::vector<Automorphism>, 4>{
      std::vector<Automorphism>{}, base_automorphism_table(1),
      base_automorphism_table(2), base_automorphism_table(3)};
  return (*cache)[static_cast<std::size_t>(n)];
}

// sigma0 whose half at x_n = src_half carries xr to yr.
Automorphism transport_half_split(int n, bool src_half, Label xr, Label yr) {
  if (n % 3 != 0) {
    const Automorphism phi =
        xr == yr ? Automorphism::identity(n - 1) : transport(xr, yr);
    return Automorphism::sigma0(n, phi);
  }
  if (xr == yr) {
    const Automorphism lift =
        Automorphism::phi_lift(0, Automorphism::identity(n - 3), n);
    return Automorphism::sigma0(n, lift);
  }
  const Automorphism inner =
      transport(xr.low_bits(n - 3), yr.low_bits(n - 3));
  const int index = (xr.bit(n - 1) != yr.bit(n - 1) ? 2 : 0) |
                    (xr.bit(n - 2) != yr.bit(n - 2) ? 1 : 0);
  const int partner = index < 2 ? index : 5 - index;  // 2 <-> 3
  const Automorphism on_src = Automorphism::phi_lift(index, inner, n);
  const Automorphism on_other = Automorphism::phi_lift(partner, inner, n);
  return src_half ? Automorphism::sigma0(n, on_other, on_src)
                  : Automorphism::sigma0(n, on_src, on_other);
}

}  // namespace

Automorphism transport(Label x, Label y) {
  if (x.dim != y.dim)
    throw std::invalid_argument("transport: dimension mismatch");
  const int n = x.dim;
  if (n == 0) return Automorphism::identity(0);
  if (n <= 3) {
    for (const auto& a : cached_base_table(n))
      if (a.apply(x) == y) return a;
    throw std::logic_error("transport: base group is not transitive");
  }
  const bool src_half = x.bit(n);
  const Automorphism split =
      transport_half_split(n, src_half, x.low_bits(n - 1), y.low_bits(n - 1));
  if (src_half == y.bit(n)) return split;
  return compose(Automorphism::sigma1(n), split);
}

namespace {

TransitivityReport run_verification(
    int n, bool full, std::uint64_t seed,
    const std::vector<std::pair<Label, Label>>& pairs, const Graph& g) {
  TransitivityReport report;
  report.n = n;
  report.full = full;
  report.seed = seed;
  for (const auto& [src, dst] : pairs) {
    const Automorphism sigma = transport(src, dst);
    const bool ok = sigma.apply(src) == dst && is_automorphism(sigma, g).ok;
    ++report.checked;
    if (ok)
      ++report.passed;
    else
      report.failures.emplace_back(src, dst);
  }
  return report;
}

}  // namespace

TransitivityReport verify_vertex_transitivity(int n, int exhaustive_cap,
                                              int size_cap) {
  if (n < 1)
    throw std::invalid_argument("verify_vertex_transitivity: n must be >= 1");
  if (n > exhaustive_cap)
    throw std::length_error(
        "verify_vertex_transitivity: full mode n = " + std::to_string(n) +
        " exceeds the exhaustive cap " + std::to_string(exhaustive_cap));
  const Graph g = build_recursive(n, size_cap);
  const Label src(0, n);
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(std::size_t{1} << n);
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t)
    pairs.emplace_back(src, Label(t, n));
  return run_verification(n, true, 0, pairs, g);
}

TransitivityReport verify_vertex_transitivity_sampled(int n, int samples,
                                                      std::uint64_t seed,
                                                      int size_cap) {
  if (n < 1)
    throw std::invalid_argument("verify_vertex_transitivity: n must be >= 1");
  if (samples < 1)
    throw std::invalid_argument("verify_vertex_transitivity: samples >= 1");
  const Graph g = build_recursive(n, size_cap);
  // mask-reduction keeps draws unbiased and portable across libraries
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = Label::mask(n);
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const Label x(rng() & mask, n);
    const Label y(rng() & mask, n);
    pairs.emplace_back(x, y);
  }
  return run_verification(n, false, seed, pairs, g);
}

std::string TransitivityReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["mode"] = full ? "full" : "sampled";
  j["seed"] = seed;
  j["checked"] = checked;
  j["passed"] = passed;
  auto fails = nlohmann::json::array();
  for (const auto& [x, y] : failures)
    fails.push_back({x.to_string(), y.to_string()});
  j["failures"] = fails;
  return j.dump();
}

}  // namespace vqn
