#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqn/graph.hpp"
#include "vqn/label.hpp"
#include "vqn/topology.hpp"

namespace vqn {

// A permutation of the n-bit labels built compositionally from the varietal
// hypercube's structural generators:
//
//   identity(n)            fixes every label
//   sigma1(n)              flips the top bit
//   sigma0(n, h0, h1)      keeps the top bit, applies h0 on the x_n=0 half
//                          and h1 on the x_n=1 half (both of dimension n-1)
//   phi_i[inner]           member of Aut(VQ_{n-1}) for n a multiple of 3:
//                          transforms bits n-1, n-2 (i selects which of the
//                          two are flipped) and applies inner (dimension n-3)
//                          to the rest
//   compose(a, b)          acts as b first, then a
//   table: ...             explicit permutation of all 2^n labels
//
// Values are immutable; copies share the underlying structure. Application is
// structural and never materializes a table, so forms work far beyond the
// graph materialization cap.
class Automorphism {
 public:
  enum class Form { identity, sigma1, sigma0, phi, compose, table };

  int dim() const;
  Form form() const;

  Label apply(Label x) const;
  Label operator()(Label x) const { return apply(x); }

  Automorphism inverse() const;

  // Image of every label, in label order. Guarded by a width limit since the
  // table has 2^dim entries.
  std::vector<std::uint64_t> to_table(int size_cap = kDefaultSizeCap) const;

  // Line-oriented text form; round-trips exactly through from_text.
  std::string to_text() const;
  static Automorphism from_text(std::string_view text);

  bool structurally_equal(const Automorphism& other) const;

  static Automorphism identity(int n);
  static Automorphism sigma1(int n);

  // Row i of the lift family over an inner automorphism of dimension n-3.
  // Requires n to be a positive multiple of 3; the result has dimension n-1.
  static Automorphism phi_lift(int index, const Automorphism& inner, int n);

  // Checked half-split. For n not a multiple of 3 the halves must be the
  // same map; for n a multiple of 3 they must be phi lifts over a common
  // inner with index pair (0,0), (1,1), (3,2) or (2,3).
  static Automorphism sigma0(int n, const Automorphism& half0,
                             const Automorphism& half1);
  static Automorphism sigma0(int n, const Automorphism& both_halves);

  // Bypasses the pairing rule so tests can demonstrate that illegal pairs
  // break adjacency. The result still evaluates and serializes normally.
  static Automorphism sigma0_unchecked(int n, const Automorphism& half0,
                                       const Automorphism& half1);

  static Automorphism from_table(std::vector<std::uint64_t> image, int n);

  friend Automorphism compose(const Automorphism& a, const Automorphism& b);

  // Structural accessors; throw unless the value has the matching form.
  int phi_index() const;
  Automorphism phi_inner() const;
  std::pair<Automorphism, Automorphism> sigma0_halves() const;
  std::pair<Automorphism, Automorphism> compose_parts() const;

  struct Node;  // defined in the implementation file

 private:
  explicit Automorphism(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// compose(a, b) applies b first: compose(a, b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

struct AutomorphismCheck {
  bool ok = false;
  // First edge whose image is a non-edge, when adjacency breaks.
  std::optional<std::pair<Label, Label>> bad_edge;
  // Two distinct labels sharing an image, when the map is not a bijection.
  std::optional<std::pair<Label, Label>> collision;

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

// Checks that the map is a bijection carrying the edge set of VQ_n onto
// itself. The graph overload avoids rebuilding VQ_n across repeated checks.
AutomorphismCheck is_automorphism(const Automorphism& a, const Graph& vq);
AutomorphismCheck is_automorphism(const Automorphism& a,
                                  int size_cap = kDefaultSizeCap);

// The full automorphism group of VQ_n for n <= 3, as explicit tables found by
// pruned exhaustive search, sorted lexicographically by table.
std::vector<Automorphism> base_automorphism_table(int n);

// An automorphism of VQ_n mapping x to y, built by the recursive
// vertex-transitivity construction. Deterministic for given inputs.
Automorphism transport(Label x, Label y);

inline constexpr int kDefaultExhaustiveCap = 8;
inline constexpr int kDefaultSampleCount = 100;

struct TransitivityReport {
  int n = 0;
  bool full = true;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<std::pair<Label, Label>> failures;

  bool ok() const { return checked > 0 && passed == checked; }
  std::string to_json() const;
};

// Full mode: transports the all-zero label to every target and verifies each
// result. Requires n <= exhaustive_cap.
TransitivityReport verify_vertex_transitivity(
    int n, int exhaustive_cap = kDefaultExhaustiveCap,
    int size_cap = kDefaultSizeCap);

// Sampled mode: verifies transport on `samples` seeded random label pairs.
TransitivityReport verify_vertex_transitivity_sampled(
    int n, int samples, std::uint64_t seed, int size_cap = kDefaultSizeCap);

}  // namespace vqn
