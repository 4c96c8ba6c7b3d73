#ifndef BFORGE_STALLINGS_HPP
#define BFORGE_STALLINGS_HPP

#include "bforge/braid.hpp"
#include "bforge/building.hpp"

namespace bforge {

/// Folded core graph of a finitely generated subgroup of a free group.
/// Vertex 0 is the base; edges carry labels 1..alphabet.
class CoreGraph {
 public:
  int alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const;
  long rank() const;  // edges - vertices + 1 on the connected core

  /// target of the labeled edge out of v, or -1
  int out_edge(std::size_t v, int label) const;
  int in_edge(std::size_t v, int label) const;

  /// reads w from the base; true iff it closes up at the base
  bool membership(const FreeWord& w) const;

  /// BFS relabeling from the base with label-sorted edges; equal strings
  /// exactly for isomorphic based labeled graphs
  std::string canonical_hash() const;

  std::string to_json_string() const;

 private:
  friend CoreGraph fold_words(const std::vector<FreeWord>&, int);
  int alphabet_ = 0;
  std::vector<std::vector<int>> out_, in_;  // [vertex][label-1] -> vertex or -1
};

/// Stallings folding of the subgroup generated by the given words
CoreGraph fold_words(const std::vector<FreeWord>& gens, int alphabet);

/// letter weights g* -> 1, d* -> -2, summed with exponents
long f_quotient_value(const std::vector<std::pair<NamedGen, long>>& word);

// frozen word tables of the rank-9 subgroup
const std::vector<std::pair<NamedGen, long>>& l_word_dg(int j);  // 1..9
FreeWord a_word_in_l(int j);                                     // 1..9
std::vector<std::pair<NamedGen, long>> expand_l_word(const FreeWord& w);

/// the j-th generator's two expressions (through the l-words and through the
/// labeled generators) agree as exact projective matrices
bool verify_l_consistency(int j);
bool verify_l_consistency_all();

/// F-value of the j-th subgroup generator (expected 0)
long f_quotient_a(int j);

/// re-derived expression of the j-th generator over the l-basis (Schreier
/// rewriting with transversal powers of g1); matrix-verified building blocks
FreeWord derived_a_word_in_l(int j);
bool verify_l_derived(int j);
bool verify_l_derived_all();
long rank_of_derived_a_words();

/// rank of the folding of the nine generators written in the l-alphabet
long rank_of_a_words();

}  // namespace bforge

#endif
