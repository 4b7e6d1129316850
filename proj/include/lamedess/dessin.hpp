#ifndef LAMEDESS_DESSIN_HPP
#define LAMEDESS_DESSIN_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamedess/permutation.hpp"

namespace lamedess {

// Cycle-type triple of a dessin: the ramification profile over 0, 1, infinity.
struct Passport {
  std::vector<int> black;  // ascending
  std::vector<int> white;
  std::vector<int> face;

  int degree() const;
  auto operator<=>(const Passport&) const = default;
  std::string str() const;
};

// A dessin d'enfant as a transitive pair of permutations on darts 0..E-1.
// Cycles of black() are the bullet vertices, cycles of white() the star
// vertices, cycles of face_permutation() the faces. The face convention is
// fixed once and for all by face * black * white = identity.
class Dessin {
 public:
  // Validates both inputs (throws NotAPermutation) and transitivity
  // (throws NotConnected).
  Dessin(int degree, Perm black, Perm white);

  int degree() const { return degree_; }
  const Perm& black() const { return black_; }
  const Perm& white() const { return white_; }

  Perm face_permutation() const;

  Passport passport() const;
  int genus() const;

  bool is_preclean() const;
  bool is_clean() const;

  // Canonical relabeling of the conjugacy class: breadth-first labels from
  // every root dart, lexicographically smallest (black, white) image wins.
  Dessin canonical_form() const;
  std::pair<Perm, Perm> canonical_key() const;

  // All automorphisms: permutations commuting with both rotations. The
  // action is semi-regular, so there are at most E of them.
  std::vector<Perm> automorphisms() const;

  friend bool operator==(const Dessin& a, const Dessin& b) {
    return a.degree_ == b.degree_ && a.black_ == b.black_ && a.white_ == b.white_;
  }

 private:
  int degree_;
  Perm black_;
  Perm white_;
};

// Oriented equivalence: simultaneous conjugacy of the two rotations.
bool equivalent(const Dessin& a, const Dessin& b);

// Mirror test: equivalence after inverting both rotations of b. Exposed for
// completeness; class counts in this project always use oriented equivalence.
bool mirror_equivalent(const Dessin& a, const Dessin& b);

enum class PointLabel { Zero, One, Lambda, Infinity };
enum class FeatureKind { Black, White, Face };

const char* label_name(PointLabel l);    // "0", "1", "lambda", "infinity"
const char* kind_name(FeatureKind k);    // "black", "white", "face"
std::optional<PointLabel> label_from_name(const std::string& s);
std::optional<FeatureKind> kind_from_name(const std::string& s);

// A vertex or face of a dessin, stored as its dart cycle rotated so the
// smallest dart comes first.
struct Feature {
  FeatureKind kind;
  std::vector<int> cycle;

  auto operator<=>(const Feature&) const = default;
};

Feature normalize_feature(FeatureKind kind, const std::vector<int>& cycle);

// A dessin with the four singular points 0, 1, lambda, infinity pinned to
// pairwise distinct features.
class MarkedDessin {
 public:
  MarkedDessin(Dessin dessin, std::map<PointLabel, Feature> marks);

  const Dessin& dessin() const { return dessin_; }
  const std::map<PointLabel, Feature>& marks() const { return marks_; }
  const Feature& mark(PointLabel l) const { return marks_.at(l); }

  friend bool operator==(const MarkedDessin& a, const MarkedDessin& b) {
    return a.dessin_ == b.dessin_ && a.marks_ == b.marks_;
  }

 private:
  Dessin dessin_;
  std::map<PointLabel, Feature> marks_;
};

// Marked-oriented equivalence: a simultaneous conjugacy mapping each marked
// feature of a to the feature of b carrying the same label.
bool marked_equivalent(const MarkedDessin& a, const MarkedDessin& b);

// Relabel a marked dessin by conjugating both rotations (and the marks) by t.
MarkedDessin relabel(const MarkedDessin& m, const Perm& t);

}  // namespace lamedess

#endif
