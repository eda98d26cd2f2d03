#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

// An unoriented edge stored with a chosen orientation tail -> head.
// forward = alpha(tail -> head), backward = alpha(head -> tail). A valid
// axial function has backward == -forward; the two are stored separately so
// that broken input can be represented and reported.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  CovectorQ forward;
  CovectorQ backward;
};

// theta_{p,e}: for every vertex p and edge e at p, a map from the edges at p
// to the edges at the other end of e (edges named by index).
class Connection {
 public:
  using StarMap = std::map<std::size_t, std::size_t>;

  void set(std::size_t vertex, std::size_t edge, StarMap m) { maps_[{vertex, edge}] = std::move(m); }
  const StarMap* find(std::size_t vertex, std::size_t edge) const;
  const StarMap& at(std::size_t vertex, std::size_t edge) const;
  const std::map<std::pair<std::size_t, std::size_t>, StarMap>& maps() const { return maps_; }
  bool operator==(const Connection&) const = default;

 private:
  std::map<std::pair<std::size_t, std::size_t>, StarMap> maps_;
};

// A finite simple graph with an axial function on its oriented edges and an
// optional connection. Construction checks only well-formedness (simple
// graph, nonzero forms of the right dimension); the axioms are checked by
// validate_axial / validate_connection.
class GkmPair {
 public:
  GkmPair(std::size_t n, std::vector<std::string> vertex_ids, std::vector<Edge> edges,
          std::optional<Connection> connection = std::nullopt);

  std::size_t dim() const { return n_; }
  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& vertex_id(std::size_t v) const { return ids_.at(v); }
  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::size_t vertex(const std::string& id) const;  // throws PreconditionError
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edges at v in increasing index order.
  const std::vector<std::size_t>& star(std::size_t v) const { return stars_.at(v); }
  std::size_t other_end(std::size_t e, std::size_t v) const;
  // alpha(v -> other end of e)
  const CovectorQ& axial(std::size_t v, std::size_t e) const;
  std::vector<CovectorQ> star_forms(std::size_t v) const;
  // Common degree of all vertices, if regular.
  std::optional<std::size_t> valence() const;
  std::optional<std::size_t> edge_between(std::size_t p, std::size_t q) const;

  const std::optional<Connection>& connection() const { return connection_; }
  GkmPair with_connection(std::optional<Connection> c) const;

 private:
  std::size_t n_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> stars_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> between_;
  std::optional<Connection> connection_;
};

// Convenience for building edges with the usual antisymmetric axial data.
Edge make_edge(std::size_t tail, std::size_t head, CovectorQ alpha);

}  // namespace gkm
