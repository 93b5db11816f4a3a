#include "tailspace/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace tailspace {

namespace {

// In-place reduced row echelon form over GF(2); returns the rank.
int rref(std::vector<Word>& rows, int length) {
  int rank = 0;
  for (int col = 0; col < length && rank < static_cast<int>(rows.size()); ++col) {
    const Word bit = Word(1) << col;
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[static_cast<std::size_t>(i)] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && (rows[static_cast<std::size_t>(i)] & bit)) {
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank));
  return rank;
}

}  // namespace

LinearCode::LinearCode(int length, std::vector<Word> generators)
    : length_(length), rows_(std::move(generators)) {
  require(length >= 1 && length <= kMaxDimension, "capacity",
          "code length outside [1, " + std::to_string(kMaxDimension) + "]");
  const Word mask = (length == 32) ? ~Word(0) : ((Word(1) << length) - 1);
  for (Word r : rows_) {
    require((r & ~mask) == 0, "bad-code", "generator row exceeds code length");
  }
  rref(rows_, length_);
}

LinearCode LinearCode::from_strings(const std::vector<std::string>& rows) {
  require(!rows.empty(), "bad-code", "no generator rows");
  const int length = static_cast<int>(rows.front().size());
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const std::string& s : rows) {
    require(static_cast<int>(s.size()) == length, "bad-code",
            "generator rows have unequal lengths");
    Word w = 0;
    for (int i = 0; i < length; ++i) {
      require(s[static_cast<std::size_t>(i)] == '0' || s[static_cast<std::size_t>(i)] == '1',
              "bad-code", "generator rows must be 0/1 strings");
      if (s[static_cast<std::size_t>(i)] == '1') w |= Word(1) << i;
    }
    words.push_back(w);
  }
  return LinearCode(length, std::move(words));
}

bool LinearCode::contains(Word w) const {
  for (Word row : rows_) {
    const Word pivot = row & (~row + 1);  // lowest set bit
    if (w & pivot) w ^= row;
  }
  return w == 0;
}

std::vector<Word> LinearCode::codewords() const {
  require(dimension() <= kMaxEnumerationDim, "capacity",
          "codeword enumeration limited to dimension " +
              std::to_string(kMaxEnumerationDim));
  const std::size_t count = std::size_t(1) << dimension();
  std::vector<Word> words(count, 0);
  // Gray-code walk: one XOR per codeword.
  Word current = 0;
  for (std::size_t i = 1; i < count; ++i) {
    current ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
    words[i] = current;
  }
  return words;
}

std::vector<std::string> LinearCode::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (Word r : rows_) {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
      if (r & (Word(1) << i)) s[static_cast<std::size_t>(i)] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

LinearCode dual(const LinearCode& c) {
  // Pivot columns of the RREF rows; every other column is free and
  // contributes one nullspace basis vector.
  std::vector<int> pivot_of_row;
  Word pivot_mask = 0;
  for (Word row : c.rows()) {
    const int p = std::countr_zero(row);
    pivot_of_row.push_back(p);
    pivot_mask |= Word(1) << p;
  }
  std::vector<Word> basis;
  for (int col = 0; col < c.length(); ++col) {
    if (pivot_mask & (Word(1) << col)) continue;
    Word v = Word(1) << col;
    for (std::size_t r = 0; r < c.rows().size(); ++r) {
      if (c.rows()[r] & (Word(1) << col)) {
        v |= Word(1) << pivot_of_row[r];
      }
    }
    basis.push_back(v);
  }
  LinearCode d(c.length(), std::move(basis));
  require(c.dimension() + d.dimension() == c.length(), "internal",
          "dual dimensions do not sum to the length");
  return d;
}

std::optional<int> min_weight(const LinearCode& c) {
  require(c.dimension() <= kMaxEnumerationDim, "capacity",
          "min_weight enumeration limited to dimension " +
              std::to_string(kMaxEnumerationDim));
  if (c.dimension() == 0) return std::nullopt;
  const std::size_t count = std::size_t(1) << c.dimension();
  Word current = 0;
  int best = c.length() + 1;
  for (std::size_t i = 1; i < count; ++i) {
    current ^= c.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, weight(current));
  }
  return best;
}

namespace {
Eigen::VectorXd indicator_values(const LinearCode& c, double on, double off) {
  const int n = c.length();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(Index(1) << n, off);
  if (c.dimension() <= kMaxEnumerationDim) {
    for (Word w : c.codewords()) v(static_cast<Index>(w)) = on;
  } else {
    for (Index j = 0; j < v.size(); ++j) {
      if (c.contains(static_cast<Word>(j))) v(j) = on;
    }
  }
  return v;
}
}  // namespace

CubeFunction indicator(const LinearCode& c) {
  return CubeFunction(c.length(), indicator_values(c, 1.0, -1.0),
                      ValueKind::PlusMinusOne);
}

CubeFunction indicator01(const LinearCode& c) {
  return CubeFunction(c.length(), indicator_values(c, 1.0, 0.0), ValueKind::ZeroOne);
}

bool macwilliams_tail(const LinearCode& c, int k) {
  const std::optional<int> w = min_weight(dual(c));
  if (!w.has_value()) return true;  // dual is the zero code: weight infinity
  return *w > k;
}

CubeFunction coset_shift(const CubeFunction& g, Word y_mask) {
  require((Index(y_mask) >> g.dimension()) == 0, "dimension-mismatch",
          "shift point exceeds the function's dimension");
  Eigen::VectorXd v(g.size());
  for (Index j = 0; j < v.size(); ++j) v(j) = g(j ^ Index(y_mask));
  return CubeFunction(g.dimension(), std::move(v), g.kind());
}

LinearCode good_code_search(int mprime, double delta, std::uint64_t seed,
                            GoodCodeSearchOptions opts) {
  require(mprime >= 2 && mprime <= kMaxDimension, "bad-parameter",
          "good_code_search needs length in [2, 24]");
  require(delta > 0.0 && delta <= 0.5, "bad-parameter",
          "good_code_search needs delta in (0, 1/2]");
  const int dim_lo = (mprime + 3) / 4;
  const int dim_hi = (3 * mprime) / 4;
  const double weight_floor = delta * mprime - 1e-12;
  Rng rng(seed);
  const Word mask = (Word(1) << mprime) - 1;
  for (int trial = 0; trial < opts.budget; ++trial) {
    const int dim = dim_lo + static_cast<int>(rng.below(
                                 static_cast<std::uint64_t>(dim_hi - dim_lo + 1)));
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) rows.push_back(static_cast<Word>(rng.next()) & mask);
    LinearCode candidate(mprime, std::move(rows));
    if (candidate.dimension() < dim_lo || candidate.dimension() > dim_hi) continue;
    const std::optional<int> w = min_weight(candidate);
    if (w.has_value() && static_cast<double>(*w) >= weight_floor) return candidate;
  }
  fail("search-exhausted",
       "no code of length " + std::to_string(mprime) + " with weight >= " +
           std::to_string(delta) + " * length found in " +
           std::to_string(opts.budget) + " trials");
}

LinearCode tail_code_search(int dual_dim, int k, std::uint64_t seed, int max_length) {
  require(dual_dim >= 1 && k >= 0, "bad-parameter", "tail_code_search parameters");
  require(max_length <= kMaxDimension, "capacity", "length cap exceeds 24");
  Rng rng(seed);
  for (int len = std::max(dual_dim, k + 1); len <= max_length; ++len) {
    // Closed form: with length 2^d - 1 take the d x len matrix whose columns
    // are all distinct nonzero d-bit vectors; every nonzero codeword then has
    // weight exactly 2^{d-1}.
    if (len == (1 << dual_dim) - 1 && (1 << (dual_dim - 1)) > k) {
      std::vector<Word> rows(static_cast<std::size_t>(dual_dim), 0);
      for (int col = 0; col < len; ++col) {
        const Word label = static_cast<Word>(col + 1);
        for (int r = 0; r < dual_dim; ++r) {
          if (label & (Word(1) << r)) rows[static_cast<std::size_t>(r)] |= Word(1) << col;
        }
      }
      LinearCode d(len, std::move(rows));
      if (d.dimension() == dual_dim) return dual(d);
    }
    if (dual_dim == 1) {
      if (len > k) {
        const Word all = (len == 32) ? ~Word(0) : ((Word(1) << len) - 1);
        return dual(LinearCode(len, {all}));
      }
      continue;
    }
    const Word mask = (Word(1) << len) - 1;
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<Word> rows;
      rows.reserve(static_cast<std::size_t>(dual_dim));
      for (int r = 0; r < dual_dim; ++r) {
        rows.push_back(static_cast<Word>(rng.next()) & mask);
      }
      LinearCode d(len, std::move(rows));
      if (d.dimension() != dual_dim) continue;
      const std::optional<int> w = min_weight(d);
      if (w.has_value() && *w > k) return dual(d);
    }
  }
  fail("search-exhausted", "no code with dual dimension " + std::to_string(dual_dim) +
                               " and dual weight > " + std::to_string(k) +
                               " within length " + std::to_string(max_length));
}

LinearCode zero_code(int n) { return LinearCode(n, {}); }

LinearCode full_code(int n) {
  std::vector<Word> rows;
  for (int i = 0; i < n; ++i) rows.push_back(Word(1) << i);
  return LinearCode(n, std::move(rows));
}

LinearCode repetition_code(int n) {
  const Word all = (n == 32) ? ~Word(0) : ((Word(1) << n) - 1);
  return LinearCode(n, {all});
}

LinearCode even_weight_code(int n) { return dual(repetition_code(n)); }

LinearCode hamming_7_4() {
  // Systematic [7,4,3]; the dual is the [7,3,4] simplex code.
  return LinearCode::from_strings({
      "1000110",
      "0100101",
      "0010011",
      "0001111",
  });
}

LinearCode extended_hamming_8_4() {
  // [8,4,4], self-dual: overall parity appended to the rows above.
  return LinearCode::from_strings({
      "10001101",
      "01001011",
      "00100111",
      "00011110",
  });
}

}  // namespace tailspace
