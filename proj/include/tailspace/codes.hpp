#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tailspace/cube.hpp"
#include "tailspace/random.hpp"

namespace tailspace {

/// A codeword over GF(2), little-endian in the machine word: bit i-1 is
/// coordinate i, matching the cube's point indexing (so the binary image
/// ((1-x_1)/2, ..., (1-x_n)/2) of the point with index j is the word j).
using Word = std::uint32_t;

inline int weight(Word w) { return popcount32(w); }
inline int parity(Word w) { return popcount32(w) & 1; }

/// Exhaustive codeword enumeration cap (2^dim words).
inline constexpr int kMaxEnumerationDim = 22;

/// A linear subspace of {0,1}^n held as generator rows in reduced row-echelon
/// form (pivot = lowest set bit of each row, rows sorted by pivot).
class LinearCode {
 public:
  LinearCode(int length, std::vector<Word> generators);

  static LinearCode from_strings(const std::vector<std::string>& rows);

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<Word>& rows() const { return rows_; }

  bool contains(Word w) const;
  /// All 2^dim codewords (capacity-checked).
  std::vector<Word> codewords() const;
  /// Rows as ASCII bit strings, leftmost character = coordinate 1.
  std::vector<std::string> row_strings() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.length_ == b.length_ && a.rows_ == b.rows_;
  }

 private:
  int length_;
  std::vector<Word> rows_;
};

/// Nullspace of the generator matrix; dual(dual(C)) == C and the dimensions
/// sum to the length.
LinearCode dual(const LinearCode& c);

/// Exact minimal Hamming weight over nonzero codewords; nullopt is the
/// infinity sentinel for the zero code.  Rejects dim > kMaxEnumerationDim.
std::optional<int> min_weight(const LinearCode& c);

/// +-1 indicator g_C: +1 exactly on the binary image of C.
CubeFunction indicator(const LinearCode& c);
/// {0,1} indicator 1_{g_C = 1}.
CubeFunction indicator01(const LinearCode& c);

/// w(dual(C)) > k, the tail criterion for g_C.
bool macwilliams_tail(const LinearCode& c, int k);

/// g_y(x) = g(y_1 x_1, ..., y_n x_n); y is given as the mask of its -1
/// coordinates, so the point map is an index XOR.
CubeFunction coset_shift(const CubeFunction& g, Word y_mask);

struct GoodCodeSearchOptions {
  int budget = 4000;  // random generator-matrix trials before giving up
};

/// Seeded random search for a code of length mprime with
/// mprime/4 <= dim <= 3 mprime/4 and min weight >= delta * mprime,
/// exhaustively verified.  delta in (0, 1/2].  Deterministic given the seed;
/// signals search-exhausted once the budget runs out.
LinearCode good_code_search(int mprime, double delta, std::uint64_t seed,
                            GoodCodeSearchOptions opts = {});

/// Shortest-length code C whose dual has dimension dual_dim and minimum
/// weight > k, i.e. P[g_C = 1] = 2^{-dual_dim} with g_C in L+^{>k}.  Tries
/// closed-form candidates first, then seeded random search per length.
LinearCode tail_code_search(int dual_dim, int k, std::uint64_t seed,
                            int max_length = kMaxDimension);

// Named built-ins.
LinearCode zero_code(int n);
LinearCode full_code(int n);
LinearCode repetition_code(int n);
LinearCode even_weight_code(int n);
LinearCode hamming_7_4();
LinearCode extended_hamming_8_4();

}  // namespace tailspace
