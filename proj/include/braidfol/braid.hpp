#pragma once
// Positive braid words: parsing, cyclic operations, standard form, crossing
// statistics, distance functions, primality prechecks, genus.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidfol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error { using Error::Error; };
struct NotAKnot : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoSuchGenerator : Error { using Error::Error; };
struct CannotCalibrate : Error { using Error::Error; };
struct RequiresStandardForm : Error { using Error::Error; };
struct DuplicateChoice : Error { using Error::Error; };
struct ModelMismatch : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

// A positive braid word on `strands` strands. Letters are generator indices
// in 1..strands-1; the word is never empty.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  int letter(int pos) const { return letters_[mod(pos)]; }
  int mod(int pos) const {
    int L = length();
    int r = pos % L;
    return r < 0 ? r + L : r;
  }

  std::string str() const;  // space-separated indices

  bool operator==(const BraidWord& o) const {
    return strands_ == o.strands_ && letters_ == o.letters_;
  }

 private:
  int strands_;
  std::vector<int> letters_;
};

// The j-th occurrence (1-based) of generator `gen`.
struct LetterRef {
  int gen = 0;
  int occurrence = 0;
};

// Text format: whitespace-separated tokens `k` or `k^p`; `#` starts a comment.
// n = 1 + max index unless an override is given.
BraidWord parse_braid(const std::string& text, std::optional<int> strands = {});

// Cycle count of the closure permutation; 1 means knot.
int closure_components(const BraidWord& b);
bool is_knot(const BraidWord& b);

struct CrossingStats {
  std::vector<int> counts;  // counts[i] = c_i for i in 1..n-1 (index 0 unused)
  int total = 0;            // C
  int mod3[4] = {0, 0, 0, 0};  // C_1, C_2, C_3 at indices 1..3
  int c_odd = 0, c_even = 0;
  int c_min_class = 0;      // 1..3, tie rule per the crossing-distribution defn
  bool c_max_is_odd = true; // C_odd >= C_even
};
CrossingStats crossing_stats(const BraidWord& b);

enum class Side { Right, Left };

// d(j; s,t): for s<t, the number of sigma_{j+1} letters strictly between the
// s-th and t-th occurrences of sigma_j in the fixed presentation; for t<s it
// is c_{j+1} - d(j; t,s). Side::Left counts sigma_{j-1} letters instead.
// Occurrences are 1-based; s != t.
int distance(const BraidWord& b, int j, int s, int t, Side side);

// Cyclic rotation so the referenced letter comes first.
BraidWord pivot(const BraidWord& b, const LetterRef& at);
BraidWord rotate(const BraidWord& b, int k);

// Positions (0-based) of the occurrences of `gen`.
std::vector<int> occurrence_positions(const BraidWord& b, int gen);

// Standard form: no sigma_i sigma_{i+1} sigma_i subword in any cyclic
// presentation, modulo far commutations. standardize() rewrites every such
// pattern via sigma_i sigma_{i+1} sigma_i -> sigma_{i+1} sigma_i sigma_{i+1},
// commuting far letters out of the window first. Deterministic: left-to-right
// passes that resume two letters past each rewritten window, then cyclic
// wrap patterns, until a clean pass.
BraidWord standardize(const BraidWord& b);
bool is_standard(const BraidWord& b);

// Number of maximal sigma_i runs in the cyclic word.
int block_count(const BraidWord& b, int gen);

struct PrimalityReport {
  std::vector<std::string> violations;
  bool passes() const { return violations.empty(); }
};

// Necessary conditions for the closure to be a prime knot:
//   - c_i >= 2 for all i,
//   - the block function is >= 2 for all i,
//   - if c_i = 2: both cyclic gaps contain a sigma_{i-1} (i >= 2) and a
//     sigma_{i+1} (i <= n-2),
//   - no cyclic gap of column i contains every sigma_{i+1} letter, and no
//     gap of column i+1 contains every sigma_i letter (else the closure is
//     a connected sum).
PrimalityReport primality_precheck(const BraidWord& b);

// g = (C - n + 1) / 2 for knot closures.
int genus(const BraidWord& b);

// Canonical calibration with respect to the band sigma_{s,t}: pivot about the
// band's letter, then pivot about the last sigma_{s+1} of that presentation.
// In the result, alpha_{s+1,1} encloses the distinguished band on the right.
BraidWord canonical_calibrate(const BraidWord& b, const LetterRef& band);

}  // namespace braidfol
