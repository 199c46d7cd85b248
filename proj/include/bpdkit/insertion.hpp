#pragma once

#include <optional>
#include <vector>

#include "bpdkit/common.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

struct ColumnInsertion {
  std::vector<int> column;
  /// Value passed on to the next column; empty when x was appended.
  std::optional<int> forwarded;
  bool appended = false;
};

/// Edelman-Greene rule for one strictly increasing column. Inserting the
/// largest entry of the column is undefined and throws UndefinedInsertion.
ColumnInsertion eg_insert_column(std::vector<int> column, int x);

struct TableauInsertion {
  Tableau tableau;
  Cell cell;  // the box created by the insertion
};

/// T <- x, applying the column rule left to right until a value is appended.
TableauInsertion eg_insert(const Tableau& t, int x);

struct InsertionPair {
  Tableau p_tableau;
  Tableau q_tableau;

  friend bool operator==(const InsertionPair&, const InsertionPair&) = default;
};

/// Inserts the letters in order and records each row index in the new box.
/// Throws InvalidBiword unless `c` is a reduced compatible sequence.
InsertionPair eg_pq(const CompatibleSequence& c);
Tableau q_tableau(const CompatibleSequence& c);

}  // namespace bpdkit
