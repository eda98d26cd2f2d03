#pragma once

#include <optional>
#include <vector>

#include "gkm/constructions.hpp"
#include "gkm/gkm_pair.hpp"
#include "gkm/subobjects.hpp"

namespace gkm {

// A map from vertices (by index) to polynomials homogeneous of one degree.
struct CohClass {
  int degree = 0;
  std::vector<Polynomial> values;
  bool operator==(const CohClass&) const = default;
};

struct ClassCheck {
  bool ok = true;
  std::optional<std::size_t> failing_edge;  // first edge whose form fails to divide
};

// Divisibility of f(p) - f(q) by alpha_e on every edge. Throws
// PreconditionError if the values are not homogeneous of a common degree.
ClassCheck is_class(const GkmPair& pair, const std::vector<Polynomial>& values);
ClassCheck is_class(const GkmPair& pair, const CohClass& f);

// Common degree of the values; throws on inhomogeneous or mixed input. An
// all-zero vector takes fallback.
int common_degree(const std::vector<Polynomial>& values, int fallback);

struct CohBasis {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<CohClass> basis;
};

// Basis of H^{2k} from the kernel of the linear system in the monomial
// coefficients of all f(p): each edge contributes the coefficients of
// reduce_mod_line(f(p) - f(q), alpha_e). If support is given, vertices
// outside it are forced to zero.
CohBasis coh_basis(const GkmPair& pair, int k, const std::vector<bool>* support = nullptr);
std::size_t coh_dimension(const GkmPair& pair, int k, const std::vector<bool>* support = nullptr);

CohClass constant_class(const GkmPair& pair, const Rational& c);
CohClass chern_class(const GkmPair& pair, int k);
CohClass thom_class_vertex(const GkmPair& pair, std::size_t p);
// Product of the star forms not in the subobject, on its vertices; zero
// elsewhere. Throws for an incompatible subgraph.
CohClass thom_class_subobject(const GkmPair& pair, const Subgraph& sub);
// Extends a class of the induced sub-pair by zero and multiplies by the
// Thom class of the subobject.
CohClass gysin(const GkmPair& pair, const Subgraph& sub, const CohClass& f1);
CohClass restrict_class(const CohClass& f, const Subgraph& sub);
// (beta^* f)(v) = f(beta(v)).
CohClass pullback(const CohClass& f, const std::vector<std::size_t>& vertex_map);

CohClass multiply(const CohClass& f, const CohClass& g);
CohClass add(const CohClass& f, const CohClass& g);
// h * f for a homogeneous polynomial h (module structure over S(g*)).
CohClass scale(const Polynomial& h, const CohClass& f);
CohClass power(const CohClass& f, unsigned k, std::size_t nvars);
bool is_zero(const CohClass& f);

struct SymplecticCheck {
  bool symplectic = false;
  std::vector<Rational> lambdas;  // per edge: c(p) - c(q) = lambda * alpha(q -> p)
};

// Throws PreconditionError unless c has degree 1 and is a class.
SymplecticCheck is_symplectic(const GkmPair& pair, const CohClass& c);

struct BlowupCheck {
  BlowUp blowup;
  bool pullbacks_are_classes = true;
  bool pullback_injective = true;
  CohClass tau;  // Thom class of the singular locus
  bool tau_is_class = false;
  bool relation_holds = false;
  std::vector<std::size_t> base_dims;      // dim H^{2k}(base), k = 0..max_k
  std::vector<std::size_t> blowup_dims;    // dim H^{2k}(blow-up)
  std::vector<std::size_t> expected_dims;  // base + sum_{j=1}^{d-1} dim S^{k-j}
};

// Pullbacks along the blow-down map, the Thom class of the singular locus
// and the relation sum_{j=0}^{d} (-1)^j (beta^* c_j) tau^{d-j} = 0 with
// c_0 = 1, c_j the Chern classes for 0 < j < d and c_d the Thom class of p0.
BlowupCheck blowup_class_check(const GkmPair& base, std::size_t p0, int max_k);

}  // namespace gkm
