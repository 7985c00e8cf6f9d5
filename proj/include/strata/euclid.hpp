// euclid.hpp: twist-word synthesis along the Euclidean algorithm on the
// b-curve index circle.
//
// The b-curves sit at indices 1..2g-2 arranged cyclically. A prototype built
// from a partition kappa certifies the twists about its kept b-curves for
// free; every other index with the right residue is reached by trading twists
// along arithmetic progressions. One trade step ("addition") produces
// T(b_{i+2x}) from T(b_i), T(b_{i+x}) and the row/column twists; the inverse
// trade ("subtraction") walks downward. Iterating the trades with step sizes
// taken from the remainder chain of gcd computations certifies exactly the
// indices congruent to 3 mod gcd(kappa).
//
// Words are sequences of signed letters naming network curves ("a3", "a2'",
// "b7") or chain boundaries ("c(2,5)"). A word W acts by applying its
// letters' transvections in sequence order; a certificate (target, source, W)
// asserts T(target) = W T(source) W^{-1} and is checked by transporting the
// source's framed and integral classes through W.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/curve_system.hpp"
#include "strata/spin.hpp"

namespace strata {

struct Letter {
  std::string name;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

// Letters act in sequence order: the word {t, u} means "twist about t, then
// about u", so as a mapping class it is T(u) T(t).
using TwistWord = std::vector<Letter>;

TwistWord inverse_word(const TwistWord& w);
std::string word_to_json(const TwistWord& w);   // [["b3",1],["a2",-1],...]
TwistWord word_from_json(const std::string& text);

// A positive braid letter (k, e) crosses strands k and k+1 with sign e.
struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> letters;
};

// sigma_k maps to the twist about chain[k-1]; the chain must have exactly
// strands-1 entries.
TwistWord braid_to_twists(const BraidWord& b, const std::vector<std::string>& chain);

// Row/column word carrying the chain boundary c(i,j) to c(k,l), verified on
// classes. Both curves must have the same index difference (for the labeling
// with a fused handle, c(1,m) counts as difference m-2). Equal pairs give the
// empty word.
TwistWord cij_transport_word(const Prototype& p, int i, int j, int k, int l);

// Words for a pair (i, j) of b-indices whose index interval avoids the
// special columns, built from a single run along the spanning chain.
struct OneSidedWords {
  TwistWord ga;        // the bare row/column run
  TwistWord to_chain;  // over rows/columns + T(b_j): maps b_i to the pair's chain boundary
  TwistWord to_far;    // over rows/columns + T(chain boundary): maps b_i to b_j
};
OneSidedWords one_sided_words(const Prototype& p, int i, int j);

// Pair whose interval crosses exactly one special column: word over
// rows/columns + the twist about the pair's natural chain boundary, mapping
// b_i to b_j.
TwistWord two_sided_words(const Prototype& p, int i, int j);

// Pair crossing two special columns (fused-handle labeling only): same
// contract as two_sided_words, assembled from the three-subsurface pass.
TwistWord three_sided_word(const Prototype& p, int i, int j);

// Which two of the three twists {T(b_i), T(b_j), T(c_(k,l))} are on hand.
enum class KnownPair {
  EndTwists,          // b_i and b_j known: word maps b_i to c_(k,l)
  SourceAndBoundary,  // b_i and c known: word maps b_i to b_j
  TargetAndBoundary,  // b_j and c known: word maps b_j to b_i
};

// The index-trading word for pair (i, j) realized over the canonical chain
// boundary c_(k,l). Requires 2 <= k < l <= g and l - k == (j - i) mod 2g-2,
// with that residue at most g-2.
TwistWord heuristic_word(const Prototype& p, int i, int j, int k, int l,
                         KnownPair have);

// Flattened trade words over the base alphabet (rows, columns, b-curves).
// addition_word(p, i, x) maps b_{i+x} to b_{i+2x} using T(b_i), T(b_{i+x});
// subtraction_word(p, i, x) maps b_{i+x} to b_i using T(b_{i+x}), T(b_{i+2x}).
// x = 0 gives the empty word; x > g-2 is an error.
TwistWord addition_word(const Prototype& p, int i, int x);
TwistWord subtraction_word(const Prototype& p, int i, int x);

struct Certificate {
  std::string target;
  std::string source;
  TwistWord word;
};

// One reduction stage: kappa_j has d_j parts equal to r_j followed by the
// tail k_{j+1}..k_n; Q and R are the quotient/remainder chain of
// gcd(r_j, k_{j+1}); y and yp are the unreduced endpoint index sequences of
// the trade phases.
struct EuclidStage {
  int j = 0;
  long long rj = 0;
  long long dj = 0;
  long long k_next = 0;
  std::vector<long long> Q, R, y, yp;
};

struct EuclideanTrace {
  int g = 0;
  std::vector<int> kappa;
  std::optional<Parity> spin;
  int r_final = 0;
  std::vector<EuclidStage> stages;
  std::vector<Certificate> certificates;
  std::vector<int> targets;  // certified b-indices, ascending
};

// Run the full reduction for kappa (parts ascending). Uniform kappa yields an
// empty stage list and identity certificates. Preconditions: g >= 4 and
// gcd(kappa) not in {2g-2, g-1} (those moduli carry the split components and
// are out of scope here).
EuclideanTrace euclidean_trace(const std::vector<int>& kappa,
                               std::optional<Parity> spin);

std::string trace_to_json(const EuclideanTrace& t);

// Check that w transports source's framed and integral classes to target's,
// up to sign. Names follow the letter alphabet. This is the certificate
// soundness check: a necessary condition on homology and winding data.
bool verify_word(const Prototype& p, const TwistWord& w, const std::string& source,
                 const std::string& target);

// Integral action of a twist word on the prototype's 2g homology
// coordinates. rows[k] is the k-th row of the matrix acting on column
// vectors.
struct SymplecticMatrix {
  int g = 0;
  std::vector<std::vector<long long>> rows;
  std::vector<long long> apply(const std::vector<long long>& x) const;
  bool operator==(const SymplecticMatrix&) const = default;
};

// Product of the integral transvections named by the word, applied in
// sequence order. The empty word gives the identity; the result is checked
// to preserve the intersection pairing.
SymplecticMatrix symplectic_of(const Prototype& p, const TwistWord& w);

// Exhaustively check that the mod-2 reduction of m preserves the quadratic
// refinement built from the framing q: q(m x) = q(x) for all x in Z_2^{2g}.
// Requires even q.r.
bool preserves_quadratic_form(const SymplecticMatrix& m, const SpinStructure& q);

}  // namespace strata
