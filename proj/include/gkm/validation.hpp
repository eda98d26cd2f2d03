#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/gkm_pair.hpp"

namespace gkm {

// One failed axiom with its witness. Axiom ids: "valence", "1.16", "1.17",
// "1.18" for the axial function; "1.31", "1.32", "1.33", "1.34" for a
// connection.
struct Violation {
  std::string axiom;
  std::string detail;
  std::vector<std::string> vertices;
  std::vector<std::size_t> edges;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void append(const ValidationReport& o) { violations.insert(violations.end(), o.violations.begin(), o.violations.end()); }
};

ValidationReport validate_axial(const GkmPair& pair);
ValidationReport validate_connection(const GkmPair& pair, const Connection& theta);

// For the edge e (tail p, head q): a bijection star(p) -> star(q) matching
// residues modulo alpha_e, found by augmenting paths in input order; nullopt
// if none exists.
std::optional<Connection::StarMap> star_matching(const GkmPair& pair, std::size_t e);

// The unique connection compatible with alpha. Throws AmbiguousConnection if
// two star forms at some vertex agree modulo an edge form, and NoConnection
// if residues at the two ends of an edge cannot be matched.
Connection infer_connection(const GkmPair& pair);

// The pair's own connection if present, otherwise the inferred one.
Connection connection_of(const GkmPair& pair);

}  // namespace gkm
