#include "bforge/braid.hpp"

#include <cctype>
#include <sstream>

namespace bforge {

FreeWord FreeWord::gen(int symbol, int exp) {
  if (symbol <= 0) throw Error("free-group symbol must be positive");
  FreeWord w;
  int letter = exp < 0 ? -symbol : symbol;
  long k = exp < 0 ? -static_cast<long>(exp) : exp;
  for (long j = 0; j < k; ++j) w.w_.push_back(letter);
  return w;
}

void FreeWord::push(int letter) {
  if (letter == 0) throw Error("zero letter");
  if (!w_.empty() && w_.back() == -letter)
    w_.pop_back();
  else
    w_.push_back(letter);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r = *this;
  for (int l : o.w_) r.push(l);
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) r.w_.push_back(-*it);
  return r;
}

std::string FreeWord::str(char lower) const {
  if (w_.empty()) return "1";
  std::string s;
  char upper = static_cast<char>(std::toupper(lower));
  for (std::size_t j = 0; j < w_.size(); ++j) {
    if (j) s += ' ';
    int l = w_[j];
    s += (l > 0 ? lower : upper);
    s += std::to_string(l > 0 ? l : -l);
  }
  return s;
}

FreeWord FreeWord::parse(const std::string& text, char lower) {
  FreeWord w;
  char upper = static_cast<char>(std::toupper(lower));
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || (tok[0] != lower && tok[0] != upper))
      throw Error("bad free-word token: " + tok);
    int idx = std::stoi(tok.substr(1));
    if (idx <= 0) throw Error("bad free-word token: " + tok);
    w.push(tok[0] == lower ? idx : -idx);
  }
  return w;
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : n_(strands), w_(std::move(letters)) {
  if (strands < 2) throw Error("braid group needs at least 2 strands");
  for (const auto& l : w_)
    if (l.index < 1 || l.index >= n_ || (l.sign != 1 && l.sign != -1))
      throw Error("braid letter out of range");
}

BraidWord BraidWord::gen(int strands, int index, int exp) {
  BraidWord w(strands);
  if (index < 1 || index >= strands) throw Error("braid generator index out of range");
  int sign = exp < 0 ? -1 : 1;
  long k = exp < 0 ? -static_cast<long>(exp) : exp;
  for (long j = 0; j < k; ++j) w.w_.push_back({index, sign});
  return w;
}

long BraidWord::writhe() const {
  long s = 0;
  for (const auto& l : w_) s += l.sign;
  return s;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (n_ != o.n_) throw Error("strand count mismatch");
  BraidWord r = *this;
  r.w_.insert(r.w_.end(), o.w_.begin(), o.w_.end());
  return r;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(n_);
  for (auto it = w_.rbegin(); it != w_.rend(); ++it)
    r.w_.push_back({it->index, -it->sign});
  return r;
}

BraidWord BraidWord::pow(long e) const {
  BraidWord base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  BraidWord r(n_);
  for (long j = 0; j < k; ++j) r = r * base;
  return r;
}

BraidWord BraidWord::conjugated_by(const BraidWord& g) const {
  return g * *this * g.inverse();
}

std::string BraidWord::str() const {
  if (w_.empty()) return "1";
  std::string s;
  for (std::size_t j = 0; j < w_.size(); ++j) {
    if (j) s += ' ';
    s += "s" + std::to_string(w_[j].index);
    if (w_[j].sign < 0) s += "^-1";
  }
  return s;
}

ArtinAuto ArtinAuto::identity(int n) {
  ArtinAuto a;
  for (int j = 1; j <= n; ++j) a.img_.push_back(FreeWord::gen(j));
  return a;
}

ArtinAuto ArtinAuto::of_letter(int n, int index, int sign) {
  ArtinAuto a = identity(n);
  FreeWord xi = FreeWord::gen(index), xj = FreeWord::gen(index + 1);
  if (sign > 0) {
    a.img_[index - 1] = xi * xj * xi.inverse();
    a.img_[index] = xi;
  } else {
    a.img_[index - 1] = xj;
    a.img_[index] = xj.inverse() * xi * xj;
  }
  return a;
}

FreeWord ArtinAuto::apply(const FreeWord& w) const {
  FreeWord r;
  for (int l : w.letters()) {
    const FreeWord& im = img_[(l > 0 ? l : -l) - 1];
    FreeWord piece = l > 0 ? im : im.inverse();
    for (int x : piece.letters()) r.push(x);
  }
  return r;
}

ArtinAuto ArtinAuto::after(const ArtinAuto& inner) const {
  ArtinAuto r;
  r.img_.reserve(inner.img_.size());
  for (const auto& w : inner.img_) r.img_.push_back(apply(w));
  return r;
}

std::string ArtinAuto::str() const {
  std::string s;
  for (std::size_t j = 0; j < img_.size(); ++j) {
    if (j) s += "; ";
    s += "x" + std::to_string(j + 1) + " -> " + img_[j].str();
  }
  return s;
}

ArtinAuto artin_images(const BraidWord& w) {
  ArtinAuto acc = ArtinAuto::identity(w.strands());
  for (const auto& l : w.letters())
    acc = acc.after(ArtinAuto::of_letter(w.strands(), l.index, l.sign));
  return acc;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error("strand count mismatch");
  return artin_images(a) == artin_images(b);
}

BraidWord braid_b1(int strands) {
  return parse_braid("s1 s3^-1", strands);
}

BraidWord braid_b2(int strands) {
  return parse_braid("s1 s2 s3 s1^-1 s2^-1 s1^-1", strands);
}

BraidWord parse_braid(const std::string& text, int strands) {
  BraidWord acc(strands);
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    long exp = 1;
    std::string head = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      exp = std::stol(tok.substr(caret + 1));
    }
    BraidWord atom(strands);
    if (head == "b1") {
      atom = braid_b1(strands);
    } else if (head == "b2") {
      atom = braid_b2(strands);
    } else if (head.size() >= 2 && head[0] == 's') {
      int idx = std::stoi(head.substr(1));
      atom = BraidWord::gen(strands, idx);
    } else {
      throw Error("bad braid token: " + tok);
    }
    acc = acc * atom.pow(exp);
  }
  return acc;
}

std::vector<BraidWord> centralizer_data(CentralizedGen which) {
  const int n = 4;
  if (which == CentralizedGen::Sigma3)
    return {parse_braid("s1", n), parse_braid("s3", n),
            parse_braid("s3 s2 s3", n).pow(2)};
  return {braid_b2(n),
          braid_b1(n).inverse() * braid_b2(n) * braid_b1(n),
          parse_braid("s2", n),
          parse_braid("s1 s2 s1", n).pow(2)};
}

}  // namespace bforge
