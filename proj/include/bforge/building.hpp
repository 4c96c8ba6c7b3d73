#ifndef BFORGE_BUILDING_HPP
#define BFORGE_BUILDING_HPP

#include <map>

#include "bforge/projective.hpp"

namespace bforge {

/// Vertex of the affine building at the valuation at infinity: an invertible
/// matrix over F(t) modulo scalars and right units of O_inf, held as the
/// unique column-reduced representative (pivots pi^a, pi = 1/t, entries below
/// a pivot reduced to principal parts).
class LatticeClass {
 public:
  static LatticeClass canonical(const RMat& x);  // error: singular input

  const RMat& rep() const { return rep_; }
  /// type in Z/3, fixed so the link classes of the standard generators carry
  /// type 1 (equivalently -v_inf(det rep) mod 3)
  int vertex_type() const { return type_; }
  const std::string& key() const { return key_; }

  bool operator==(const LatticeClass& o) const { return key_ == o.key_; }
  bool operator!=(const LatticeClass& o) const { return !(*this == o); }
  bool operator<(const LatticeClass& o) const { return key_ < o.key_; }

 private:
  RMat rep_;
  std::string key_;
  int type_ = 0;
};

/// oracle form of class equality: X1^-1 X2 = c * U with U, U^-1 over O_inf
bool lattice_equal_oracle(const RMat& x1, const RMat& x2);

/// Smith-style invariants of X1^-1 X2 over O_inf, sorted, starting at 0
std::array<long, 3> elem_divisors(const RMat& x1, const RMat& x2);
bool adjacent(const RMat& x1, const RMat& x2);
bool adjacent(const LatticeClass& l1, const LatticeClass& l2);

// ---- generators -----------------------------------------------------------

/// unipotent generator with the radical-free representative over Q(i)
ProjMat gen_uk(const mpq_class& r, const Field* F);  // r >= 0
ProjMat gen_u0(const Field* F);                      // diag(it, 1, 1)
ProjMat gen_uinf(const Field* F);                    // diag(1, it, 1)
/// diag(1, A) for a unitary 2x2 A over Q(i)
ProjMat gen_uu(const FMat& a);
/// elementary generator with entries over a real quadratic tower; the field
/// of r must already contain sqrt(1 + r^4)
ProjMat gen_ke(const FieldElem& r);
/// diag(1, A) for an orthogonal 2x2 A
ProjMat gen_oe(const FMat& a);

enum class NamedGen { D1, D2, G1, G2, G3, G4 };
ProjMat named_gen(NamedGen which, const Field* F);
std::vector<ProjMat> standard_gens(const Field* F);  // d1, d2, g1..g4
std::string named_gen_name(NamedGen which);

/// 3x3 form diag(1, phi, phi)
LMat form_d3(const Field* F);

// ---- unipotent kernel -----------------------------------------------------

bool in_unipotent_kernel(const ProjMat& b);
/// the (1,2)/(1,3) coordinates of the evaluation at t = -i; error unless the
/// scalar-normalized evaluation is [[1,*,*],[0,1,0],[0,0,1]]
std::pair<FieldElem, FieldElem> phi_map(const ProjMat& b);

// ---- section-level verifications ------------------------------------------

bool verify_lemma43(const mpq_class& r, std::string* tower = nullptr);
bool verify_rel18();
bool verify_rel19(const mpq_class& r, std::string* tower = nullptr);
bool verify_rel20(const mpq_class& r1, const mpq_class& r2, std::string* tower = nullptr);
/// the j-th of the nine identities expressing the index-8 subgroup
/// generators through d1, d2, g1..g4 (1-based)
bool verify_eq21(int j);
bool verify_lemma47();
bool verify_phi_values();
bool verify_eq22_grid();
bool verify_section4(const std::string& id, const std::map<std::string, mpq_class>& params);

/// words of the index-8 subgroup generators in S', T'
ProjMat a_generator(int j, const Field* F);  // 1..9
/// the same generators as words in d1, d2, g1..g4
ProjMat a_generator_dg(int j, const Field* F);
/// letters of the j-th word over {d1, d2, g1..g4} with exponents
std::vector<std::pair<NamedGen, long>> a_word_dg(int j);

// ---- exploration ----------------------------------------------------------

struct VertexInfo {
  std::string key;
  int type = 0;
  int distance = 0;
};

struct SubcomplexReport {
  int radius = 0;
  bool budget_exceeded = false;
  std::vector<VertexInfo> vertices;            // [0] is the identity class
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t triangle_count = 0;
  std::vector<std::size_t> link_of_identity;   // indices adjacent to vertex 0
  std::map<int, std::size_t> type_counts;
};

SubcomplexReport explore(const std::vector<ProjMat>& gens, int radius,
                         std::size_t max_vertices = 200000);

}  // namespace bforge

#endif
