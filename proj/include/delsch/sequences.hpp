#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delsch/bigint.hpp"

namespace delsch {

enum class SequenceKind { delannoy, little_schroder, large_schroder };

std::string_view kind_name(SequenceKind kind);
std::optional<SequenceKind> kind_from_name(std::string_view name);

// Immutable table of consecutive sequence values. Delannoy and large
// Schroeder tables start at n = 0; the little Schroeder table starts at
// n = 1 (the library convention s_0 = 1 exists but is never tabulated).
// Values are immutable after construction, so tables can be shared
// read-only across threads.
class SequenceTable {
 public:
  SequenceTable(SequenceKind kind, long first_index, std::vector<BigInt> values);

  SequenceKind kind() const { return kind_; }
  long first_index() const { return first_; }
  long max_index() const { return first_ + static_cast<long>(values_.size()) - 1; }
  const std::vector<BigInt>& values() const { return values_; }

  // Value at sequence index n; throws std::out_of_range outside the table.
  const BigInt& at(long n) const;

  bool operator==(const SequenceTable&) const = default;

 private:
  SequenceKind kind_;
  long first_;
  std::vector<BigInt> values_;
};

// T_n(b,c) = sum_{k=0}^{floor(n/2)} C(n,2k) C(2k,k) b^(n-2k) c^k.
BigInt trinomial(long n, const BigInt& b, const BigInt& c);

// D_n = sum_k C(n,k) C(n+k,k). The defining sum; used as the oracle route.
BigInt delannoy_direct(long n);

// D_n = sum_k C(n+k,2k) C(2k,k), the second summation form.
BigInt delannoy_direct_alt(long n);

// s_n = sum_{k=1}^{n} N(n,k) 2^(n-k) for n >= 1; s_0 = 1 by convention.
BigInt little_schroder_direct(long n);

// S_n = sum_k C(n,k) C(n+k,k) / (k+1), each term an exact division.
BigInt large_schroder_direct(long n);

// D_0..D_{n_max} by (k+1) D_{k+1} = 3(2k+1) D_k - k D_{k-1}, seeds D_0 = 1,
// D_1 = 3. Seeds are validated against the defining sum and every division
// is asserted exact. Requires n_max >= 1.
SequenceTable delannoy_table(long n_max);

// s_1..s_{n_max} by (k+3) s_{k+2} = 3(3+2k) s_{k+1} - k s_k, seeds s_1 = 1,
// s_2 = 3, validated against the defining sum. Requires n_max >= 1.
SequenceTable little_schroder_table(long n_max);

// S_0 = 1 and S_n = 2 s_n for n >= 1. Requires n_max >= 1.
SequenceTable large_schroder_table(long n_max);

// Cache file format: a header line "<kind> <n_max>" followed by one decimal
// value per line, starting at the kind's first index. Byte-deterministic.
void write_table(const SequenceTable& table, std::ostream& os);
SequenceTable read_table(std::istream& is);

}  // namespace delsch
