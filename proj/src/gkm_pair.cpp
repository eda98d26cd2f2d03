#include "gkm/gkm_pair.hpp"

#include <stdexcept>

#include "gkm/errors.hpp"

namespace gkm {

const Connection::StarMap* Connection::find(std::size_t vertex, std::size_t edge) const {
  auto it = maps_.find({vertex, edge});
  return it == maps_.end() ? nullptr : &it->second;
}

const Connection::StarMap& Connection::at(std::size_t vertex, std::size_t edge) const {
  const StarMap* m = find(vertex, edge);
  if (!m) throw PreconditionError("connection has no map for vertex " + std::to_string(vertex) + " along edge " +
                                  std::to_string(edge));
  return *m;
}

Edge make_edge(std::size_t tail, std::size_t head, CovectorQ alpha) {
  CovectorQ back = -alpha;
  return Edge{tail, head, std::move(alpha), std::move(back)};
}

GkmPair::GkmPair(std::size_t n, std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                 std::optional<Connection> connection)
    : n_(n), ids_(std::move(vertex_ids)), edges_(std::move(edges)), connection_(std::move(connection)) {
  if (n_ == 0) throw PreconditionError("ambient dimension must be positive");
  for (std::size_t v = 0; v < ids_.size(); ++v)
    if (!index_.emplace(ids_[v], v).second) throw PreconditionError("duplicate vertex id '" + ids_[v] + "'");
  stars_.resize(ids_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    const std::string where = "edge " + std::to_string(e);
    if (ed.tail >= ids_.size() || ed.head >= ids_.size()) throw PreconditionError(where + ": vertex out of range");
    if (ed.tail == ed.head) throw PreconditionError(where + ": loop at '" + ids_[ed.tail] + "'");
    if (ed.forward.dim() != n_ || ed.backward.dim() != n_)
      throw PreconditionError(where + ": axial value has dimension other than " + std::to_string(n_));
    if (ed.forward.is_zero() || ed.backward.is_zero()) throw PreconditionError(where + ": axial value is zero");
    const auto key = std::minmax(ed.tail, ed.head);
    if (!between_.emplace(key, e).second)
      throw PreconditionError(where + ": repeats the edge " + ids_[ed.tail] + "-" + ids_[ed.head]);
    stars_[ed.tail].push_back(e);
    stars_[ed.head].push_back(e);
  }
}

std::optional<std::size_t> GkmPair::find_vertex(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GkmPair::vertex(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw PreconditionError("unknown vertex '" + id + "'");
  return *v;
}

std::size_t GkmPair::other_end(std::size_t e, std::size_t v) const {
  const Edge& ed = edges_.at(e);
  if (ed.tail == v) return ed.head;
  if (ed.head == v) return ed.tail;
  throw std::invalid_argument("other_end: vertex not on edge");
}

const CovectorQ& GkmPair::axial(std::size_t v, std::size_t e) const {
  const Edge& ed = edges_.at(e);
  if (ed.tail == v) return ed.forward;
  if (ed.head == v) return ed.backward;
  throw std::invalid_argument("axial: vertex not on edge");
}

std::vector<CovectorQ> GkmPair::star_forms(std::size_t v) const {
  std::vector<CovectorQ> out;
  for (std::size_t e : star(v)) out.push_back(axial(v, e));
  return out;
}

std::optional<std::size_t> GkmPair::valence() const {
  if (stars_.empty()) return 0;
  const std::size_t d = stars_[0].size();
  for (const auto& s : stars_)
    if (s.size() != d) return std::nullopt;
  return d;
}

std::optional<std::size_t> GkmPair::edge_between(std::size_t p, std::size_t q) const {
  auto it = between_.find(std::minmax(p, q));
  if (it == between_.end()) return std::nullopt;
  return it->second;
}

GkmPair GkmPair::with_connection(std::optional<Connection> c) const {
  GkmPair copy = *this;
  copy.connection_ = std::move(c);
  return copy;
}

}  // namespace gkm
