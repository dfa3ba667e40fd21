// Internal helpers shared by the triple-analysis translation units.  Not
// installed; everything here is an implementation detail of the library.
#ifndef MAGICAL_MATLIE_INTERNAL_HPP
#define MAGICAL_MATLIE_INTERNAL_HPP

#include <map>
#include <vector>

#include "magical/matlie.hpp"

namespace magical::detail {

// dst += c * src, coordinatewise.
void add_scaled(LieModel::Element& dst, const LieModel::Element& src,
                const Rational& c);

bool is_zero_element(const LieModel::Element& x);

// The decomposition of a module under an embedded sl2: basis weights, the
// grouping of basis indices by weight, the highest-weight spaces
// V_j = ker(ad_e) cap (weight-j block), and for every highest-weight vector
// the full lowering chain under ad_f.
struct TripleChains {
  // weights[k] is the integer eigenvalue of ad_h on basis element k.
  std::vector<int> weights;
  // blocks[w] lists the basis indices of eigenvalue w, in increasing order.
  std::map<int, std::vector<int>> blocks;
  // chains[j][i][k] = ad_f^k applied to the i-th basis vector of V_j,
  // for k = 0..j.  Vectors are full coordinate vectors on the model basis.
  std::map<int, std::vector<std::vector<LieModel::Element>>> chains;

  // Number of highest-weight vectors of weight j.
  int highest_weight_dimension(int j) const {
    auto it = chains.find(j);
    return it == chains.end() ? 0 : static_cast<int>(it->second.size());
  }
};

// Builds the decomposition above.  Throws std::invalid_argument when the
// triple does not satisfy the bracket relations, when ad_h fails to act
// diagonally on the model basis with integer eigenvalues, or when the
// lowering chains fail to span the algebra.
TripleChains build_triple_chains(const LieModel& model, const Sl2Triple& triple);

}  // namespace magical::detail

#endif  // MAGICAL_MATLIE_INTERNAL_HPP
