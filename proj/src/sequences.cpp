#include "delsch/sequences.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "delsch/errors.hpp"

namespace delsch {

namespace {

long first_index_of(SequenceKind kind) {
  return kind == SequenceKind::little_schroder ? 1 : 0;
}

void require_positive(const SequenceTable& t) {
  for (const BigInt& v : t.values()) {
    if (v <= 0) throw std::logic_error("sequence table entry not positive");
  }
}

void require_odd(const SequenceTable& t) {
  for (const BigInt& v : t.values()) {
    if (!is_odd(v)) throw std::logic_error("sequence table entry not odd");
  }
}

}  // namespace

std::string_view kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::delannoy: return "delannoy";
    case SequenceKind::little_schroder: return "little_schroder";
    case SequenceKind::large_schroder: return "large_schroder";
  }
  throw std::logic_error("unknown sequence kind");
}

std::optional<SequenceKind> kind_from_name(std::string_view name) {
  if (name == "delannoy") return SequenceKind::delannoy;
  if (name == "little_schroder" || name == "little-schroder")
    return SequenceKind::little_schroder;
  if (name == "large_schroder" || name == "large-schroder")
    return SequenceKind::large_schroder;
  return std::nullopt;
}

SequenceTable::SequenceTable(SequenceKind kind, long first_index,
                             std::vector<BigInt> values)
    : kind_(kind), first_(first_index), values_(std::move(values)) {
  if (first_ != first_index_of(kind_))
    throw std::logic_error("sequence table first index does not match kind");
  if (values_.empty()) throw std::logic_error("empty sequence table");
}

const BigInt& SequenceTable::at(long n) const {
  if (n < first_ || n > max_index())
    throw std::out_of_range("sequence index " + std::to_string(n) +
                            " outside table [" + std::to_string(first_) + ", " +
                            std::to_string(max_index()) + "]");
  return values_[static_cast<size_t>(n - first_)];
}

BigInt trinomial(long n, const BigInt& b, const BigInt& c) {
  if (n < 0) throw std::invalid_argument("trinomial: n must be >= 0");
  BigInt total = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    total += binomial(n, 2 * k) * binomial(2 * k, k) *
             int_pow(b, static_cast<unsigned long>(n - 2 * k)) *
             int_pow(c, static_cast<unsigned long>(k));
  }
  return total;
}

BigInt delannoy_direct(long n) {
  if (n < 0) throw std::invalid_argument("delannoy_direct: n must be >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n; ++k) total += binomial(n, k) * binomial(n + k, k);
  return total;
}

BigInt delannoy_direct_alt(long n) {
  if (n < 0) throw std::invalid_argument("delannoy_direct_alt: n must be >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n; ++k)
    total += binomial(n + k, 2 * k) * binomial(2 * k, k);
  return total;
}

BigInt little_schroder_direct(long n) {
  if (n < 0) throw std::invalid_argument("little_schroder_direct: n must be >= 0");
  if (n == 0) return 1;  // library convention, never produced by a sum
  BigInt total = 0;
  for (long k = 1; k <= n; ++k)
    total += narayana(n, k) * int_pow(2, static_cast<unsigned long>(n - k));
  return total;
}

BigInt large_schroder_direct(long n) {
  if (n < 0) throw std::invalid_argument("large_schroder_direct: n must be >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n; ++k) {
    total += div_exact(binomial(n, k) * binomial(n + k, k), BigInt(k + 1),
                       "large_schroder term");
  }
  return total;
}

SequenceTable delannoy_table(long n_max) {
  if (n_max < 1) throw std::invalid_argument("delannoy_table: n_max must be >= 1");
  std::vector<BigInt> v(static_cast<size_t>(n_max) + 1);
  v[0] = 1;
  v[1] = 3;
  if (v[0] != delannoy_direct(0) || v[1] != delannoy_direct(1))
    throw std::logic_error("delannoy seeds disagree with the defining sum");
  for (long k = 1; k + 1 <= n_max; ++k) {
    v[static_cast<size_t>(k) + 1] =
        div_exact(3 * (2 * k + 1) * v[static_cast<size_t>(k)] -
                      k * v[static_cast<size_t>(k) - 1],
                  BigInt(k + 1), "delannoy recurrence");
  }
  SequenceTable t(SequenceKind::delannoy, 0, std::move(v));
  require_positive(t);
  require_odd(t);
  return t;
}

SequenceTable little_schroder_table(long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("little_schroder_table: n_max must be >= 1");
  std::vector<BigInt> v(static_cast<size_t>(n_max));  // v[i] = s_{i+1}
  v[0] = 1;
  if (n_max >= 2) v[1] = 3;
  if (v[0] != little_schroder_direct(1) ||
      (n_max >= 2 && v[1] != little_schroder_direct(2)))
    throw std::logic_error("little schroder seeds disagree with the defining sum");
  for (long k = 1; k + 2 <= n_max; ++k) {
    // s_{k+2} lives at v[k+1]
    v[static_cast<size_t>(k) + 1] =
        div_exact(3 * (3 + 2 * k) * v[static_cast<size_t>(k)] -
                      k * v[static_cast<size_t>(k) - 1],
                  BigInt(k + 3), "little schroder recurrence");
  }
  SequenceTable t(SequenceKind::little_schroder, 1, std::move(v));
  require_positive(t);
  require_odd(t);
  return t;
}

SequenceTable large_schroder_table(long n_max) {
  if (n_max < 1)
    throw std::invalid_argument("large_schroder_table: n_max must be >= 1");
  SequenceTable little = little_schroder_table(n_max);
  std::vector<BigInt> v(static_cast<size_t>(n_max) + 1);
  v[0] = 1;
  for (long n = 1; n <= n_max; ++n) v[static_cast<size_t>(n)] = 2 * little.at(n);
  SequenceTable t(SequenceKind::large_schroder, 0, std::move(v));
  require_positive(t);
  return t;
}

void write_table(const SequenceTable& table, std::ostream& os) {
  os << kind_name(table.kind()) << ' ' << table.max_index() << '\n';
  for (const BigInt& v : table.values()) os << v.get_str() << '\n';
}

SequenceTable read_table(std::istream& is) {
  std::string kind_str;
  long n_max = 0;
  if (!(is >> kind_str >> n_max)) throw CacheFormatError("missing table header");
  auto kind = kind_from_name(kind_str);
  if (!kind) throw CacheFormatError("unknown sequence kind: " + kind_str);
  long first = first_index_of(*kind);
  if (n_max < first) throw CacheFormatError("table header n_max below first index");
  std::vector<BigInt> v;
  v.reserve(static_cast<size_t>(n_max - first) + 1);
  std::string word;
  for (long i = first; i <= n_max; ++i) {
    if (!(is >> word)) throw CacheFormatError("truncated table body");
    try {
      v.emplace_back(word);
    } catch (const std::invalid_argument&) {
      throw CacheFormatError("malformed table value: " + word);
    }
  }
  return SequenceTable(*kind, first, std::move(v));
}

}  // namespace delsch
