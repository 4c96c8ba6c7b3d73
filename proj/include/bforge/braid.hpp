#ifndef BFORGE_BRAID_HPP
#define BFORGE_BRAID_HPP

#include <string>
#include <vector>

#include "bforge/field.hpp"

namespace bforge {

/// Freely reduced word in a free group; letters are +-(1..r).
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord gen(int symbol, int exp = 1);

  const std::vector<int>& letters() const { return w_; }
  bool empty() const { return w_.empty(); }
  std::size_t size() const { return w_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  bool operator==(const FreeWord& o) const { return w_ == o.w_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  void push(int letter);  // reduces eagerly

  std::string str(char lower = 'x') const;
  static FreeWord parse(const std::string& text, char lower = 'x');

 private:
  std::vector<int> w_;
};

struct BraidLetter {
  int index;  // 1..n-1
  int sign;   // +-1
  bool operator==(const BraidLetter& o) const = default;
};

/// Word in the braid group B_n.
class BraidWord {
 public:
  explicit BraidWord(int strands) : n_(strands) {
    if (strands < 2) throw Error("braid group needs at least 2 strands");
  }
  BraidWord(int strands, std::vector<BraidLetter> letters);

  static BraidWord gen(int strands, int index, int exp = 1);

  int strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return w_; }
  long writhe() const;

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  BraidWord pow(long e) const;
  BraidWord conjugated_by(const BraidWord& g) const;  // g * this * g^-1

  std::string str() const;

 private:
  int n_;
  std::vector<BraidLetter> w_;
};

/// Automorphism of the free group F_n given by the images of x_1..x_n.
class ArtinAuto {
 public:
  static ArtinAuto identity(int n);
  /// action of sigma_i^{sign}: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
  static ArtinAuto of_letter(int n, int index, int sign);

  int rank() const { return static_cast<int>(img_.size()); }
  const FreeWord& image(int symbol) const { return img_[symbol - 1]; }
  const std::vector<FreeWord>& images() const { return img_; }

  FreeWord apply(const FreeWord& w) const;
  ArtinAuto after(const ArtinAuto& inner) const;  // this o inner

  bool operator==(const ArtinAuto& o) const { return img_ == o.img_; }
  bool operator!=(const ArtinAuto& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<FreeWord> img_;
};

/// faithful Artin action, the braid-equality oracle
ArtinAuto artin_images(const BraidWord& w);
bool braid_equal(const BraidWord& a, const BraidWord& b);

/// grammar: atom*, atom = s<i> | s<i>^<int> | b1 | b2 (expanded per B_4)
BraidWord parse_braid(const std::string& text, int strands);

BraidWord braid_b1(int strands = 4);
BraidWord braid_b2(int strands = 4);

enum class CentralizedGen { Sigma3, Sigma2 };
/// generating sets of the centralizers of sigma_3 resp. sigma_2 in B_4
std::vector<BraidWord> centralizer_data(CentralizedGen which);

}  // namespace bforge

#endif
