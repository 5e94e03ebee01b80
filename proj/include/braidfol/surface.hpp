#pragma once
// Bennequin surface combinatorics: brick diagram, columns, plumbing/image
// arc enclosures, Hopf plumbing factorization, rendering.

#include "braidfol/braid.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace braidfol {

// The combinatorics of the Bennequin surface for one presentation.
// Positions are 0-based letter indices; column of a band = its letter.
// Circle k (1..n) is the boundary of Seifert disk S_k; its sites are the
// letters of columns k-1 and k, interleaved by position.
class BrickDiagram {
 public:
  explicit BrickDiagram(const BraidWord& b);

  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands(); }
  int positions() const { return word_.length(); }
  int column_of(int pos) const { return word_.letters()[pos]; }

  // occurrences of column k, ascending positions
  const std::vector<int>& occ(int k) const { return occ_[k]; }
  int count(int k) const { return static_cast<int>(occ_[k].size()); }

  // sites of circle k, ascending positions
  const std::vector<int>& sites(int k) const { return sites_[k]; }

  // cyclic gap j (0-based) of column k runs from occ(k)[j] to the next
  // occurrence cyclically; gaps 0..c_k-2 are the linear plumbing arcs,
  // gap c_k-1 wraps the seam.
  std::pair<int, int> gap(int k, int j) const;

  // x strictly inside the cyclic interval (a, b)?
  bool cyc_inside(int a, int x, int b) const;
  // cyclic distance from a forward to b (0 if equal)
  int cyc_dist(int a, int b) const;

  // first/last occurrence of `gen` strictly after/before pos (cyclic);
  // -1 if gen never occurs
  int first_after(int pos, int gen) const;
  int last_before(int pos, int gen) const;
  // number of `gen` letters strictly inside cyclic (a, b)
  int count_in_gap(int a, int b, int gen) const;

 private:
  BraidWord word_;
  std::vector<std::vector<int>> occ_;
  std::vector<std::vector<int>> sites_;
};

// Enclosure data for the plumbing arc alpha_{k,j} (1-based j <= c_k - 1 in
// reports; the model also admits the wrap gap j = c_k).
struct PlumbingArc {
  int column = 0;
  int ordinal = 0;                 // 1-based gap index
  int left_enclosed_band = 0;      // position of b_{k,j}
  std::vector<int> right_enclosure;  // positions of the d_L bands
};

struct ImageArc {
  int column = 0;
  int ordinal = 0;
  int right_enclosed_band = 0;     // position of b_{k,j+1}
  std::vector<int> left_enclosure;   // positions of the d bands
};

// Both arcs for (column k, ordinal j), 1 <= j <= c_k - 1.
std::pair<PlumbingArc, ImageArc> arc_enclosures(const BrickDiagram& d, int k,
                                                int j);

struct HopfStep {
  enum Kind { UnknotBand, Stabilize, Plumb } kind;
  int column = 0;
  int ordinal = 0;   // 1-based plumbing ordinal within the column
  int position = 0;  // letter position of the step's band
};

struct HopfFactorization {
  std::vector<HopfStep> steps;
  // twist curves bottom-to-top: all of column n-1 first, then n-2, ...
  std::vector<std::pair<int, int>> twist_curves;  // (column, ordinal)
  int plumbing_count() const;
};

HopfFactorization hopf_sequence(const BraidWord& b);

enum class Dir { Left, Right };
inline Dir opposite(Dir d) { return d == Dir::Left ? Dir::Right : Dir::Left; }
inline const char* dir_name(Dir d) { return d == Dir::Left ? "left" : "right"; }

// One branched surface: chosen plumbing arcs with co-orientations.
// Keys are (column, 0-based gap index).
struct ArcAssignment {
  std::map<std::pair<int, int>, Dir> arcs;

  bool has(int k, int j) const { return arcs.count({k, j}) > 0; }
  void set(int k, int j, Dir d) { arcs[{k, j}] = d; }
  size_t size() const { return arcs.size(); }
};

// Deterministic drawings. ASCII uses |, -, <, > glyphs, one band per row;
// SVG marks chosen arcs with arrow paths and image arcs dashed.
std::string render_ascii(const BrickDiagram& d, const ArcAssignment* a);
std::string render_svg(const BrickDiagram& d, const ArcAssignment* a);

}  // namespace braidfol
