#include "delsch/sequences.hpp"

#include <sstream>

#include "delsch/errors.hpp"
#include "ds_test.hpp"

using namespace delsch;

int main() {
  DS_TEST("trinomial_values");
  {
    DS_CHECK_EQ(trinomial(0, 5, -7), 1);
    DS_CHECK_EQ(trinomial(0, 0, 0), 1);
    DS_CHECK_EQ(trinomial(3, 1, 1), 7);  // central trinomial coefficient
    DS_CHECK_EQ(trinomial(2, 3, 2), 13);
    DS_CHECK_EQ(trinomial(2, 3, 2), delannoy_direct(2));
  }

  DS_TEST("delannoy_direct_values");
  {
    DS_CHECK_EQ(delannoy_direct(0), 1);
    // oracle: the two-term sum written out
    DS_CHECK_EQ(delannoy_direct(1),
                binomial(1, 0) * binomial(1, 0) + binomial(1, 1) * binomial(2, 1));
    DS_CHECK_EQ(delannoy_direct(1), 3);
    DS_CHECK_EQ(delannoy_direct(4), 321);
    DS_CHECK_EQ(delannoy_direct(5), 1683);
  }

  DS_TEST("delannoy_table_recurrence");
  {
    SequenceTable t = delannoy_table(2);
    DS_CHECK_EQ(t.at(0), 1);
    DS_CHECK_EQ(t.at(1), 3);
    DS_CHECK_EQ(t.at(2), 13);  // 2 D_2 = 9 D_1 - D_0
    SequenceTable t5 = delannoy_table(5);
    DS_CHECK_EQ(t5.at(5), 1683);
    DS_CHECK_EQ(t5.at(5), delannoy_direct(5));
    SequenceTable seeds = delannoy_table(1);
    DS_CHECK_EQ(seeds.values().size(), 2u);
    DS_CHECK_EQ(seeds.at(1), 3);
    DS_CHECK_THROWS(delannoy_table(0), std::invalid_argument);
    DS_CHECK_THROWS(t5.at(6), std::out_of_range);
    DS_CHECK_THROWS(t5.at(-1), std::out_of_range);
  }

  DS_TEST("little_schroder_direct_values");
  {
    DS_CHECK_EQ(little_schroder_direct(1), 1);
    DS_CHECK_EQ(little_schroder_direct(3),
                narayana(3, 1) * 4 + narayana(3, 2) * 2 + narayana(3, 3));
    DS_CHECK_EQ(little_schroder_direct(3), 11);
    DS_CHECK_EQ(little_schroder_direct(5), 197);
    DS_CHECK_EQ(little_schroder_direct(0), 1);  // library convention
  }

  DS_TEST("little_schroder_table_recurrence");
  {
    SequenceTable t = little_schroder_table(4);
    DS_CHECK_EQ(t.first_index(), 1);
    DS_CHECK_EQ(t.at(1), 1);
    DS_CHECK_EQ(t.at(2), 3);
    DS_CHECK_EQ(t.at(3), 11);
    DS_CHECK_EQ(t.at(4), 45);  // 5 s_4 = 21 s_3 - 2 s_2
    SequenceTable t6 = little_schroder_table(6);
    DS_CHECK_EQ(t6.at(6), 903);  // 7 s_6 = 33 s_5 - 4 s_4
    SequenceTable t1 = little_schroder_table(1);
    DS_CHECK_EQ(t1.values().size(), 1u);
    DS_CHECK_EQ(t1.at(1), 1);
    DS_CHECK_THROWS(t.at(0), std::out_of_range);
  }

  DS_TEST("large_schroder_values");
  {
    DS_CHECK_EQ(large_schroder_direct(0), 1);
    DS_CHECK_EQ(large_schroder_direct(2), 6);
    DS_CHECK_EQ(large_schroder_direct(2), 2 * little_schroder_direct(2));
    DS_CHECK_EQ(large_schroder_direct(4), 90);
    SequenceTable big = large_schroder_table(4);
    DS_CHECK_EQ(big.at(0), 1);
    DS_CHECK_EQ(big.at(4), 90);
  }

  DS_TEST("cross_definition_agreement");
  {
    SequenceTable d = delannoy_table(80);
    SequenceTable s = little_schroder_table(80);
    for (long n = 0; n <= 80; ++n) {
      BigInt direct = delannoy_direct(n);
      DS_CHECK_EQ(direct, delannoy_direct_alt(n));
      DS_CHECK_EQ(direct, trinomial(n, 3, 2));
      DS_CHECK_EQ(direct, d.at(n));
    }
    for (long n = 1; n <= 80; ++n) {
      DS_CHECK_EQ(little_schroder_direct(n), s.at(n));
      DS_CHECK_EQ(large_schroder_direct(n), 2 * s.at(n));
    }
  }

  DS_TEST("oddness");
  {
    SequenceTable d = delannoy_table(200);
    SequenceTable s = little_schroder_table(200);
    for (const BigInt& v : d.values()) DS_CHECK(is_odd(v) && v > 0);
    for (const BigInt& v : s.values()) DS_CHECK(is_odd(v) && v > 0);
  }

  DS_TEST("tables_are_deterministic");
  {
    DS_CHECK(delannoy_table(60) == delannoy_table(60));
    DS_CHECK(little_schroder_table(60) == little_schroder_table(60));
  }

  DS_TEST("cache_round_trip");
  {
    SequenceTable t = little_schroder_table(12);
    std::ostringstream first, second;
    write_table(t, first);
    write_table(t, second);
    DS_CHECK_EQ(first.str(), second.str());  // byte-deterministic
    std::istringstream in(first.str());
    SequenceTable back = read_table(in);
    DS_CHECK(back == t);

    std::istringstream header_only("delannoy 4\n1\n3\n13\n");
    DS_CHECK_THROWS(read_table(header_only), CacheFormatError);
    std::istringstream bad_kind("mystery 2\n1\n2\n3\n");
    DS_CHECK_THROWS(read_table(bad_kind), CacheFormatError);
    std::istringstream bad_value("delannoy 1\n1\nzebra\n");
    DS_CHECK_THROWS(read_table(bad_value), CacheFormatError);
    std::istringstream empty("");
    DS_CHECK_THROWS(read_table(empty), CacheFormatError);
  }

  DS_TEST("kind_names_round_trip");
  {
    for (SequenceKind kind : {SequenceKind::delannoy, SequenceKind::little_schroder,
                              SequenceKind::large_schroder}) {
      DS_CHECK(kind_from_name(kind_name(kind)) == kind);
    }
    DS_CHECK(!kind_from_name("no-such-kind"));
  }

  return dstest::summary();
}
