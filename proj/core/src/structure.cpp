// Double-centralizer tower of a magical triple, and the structural
// verifications: weight-zero slice brackets, principality in the
// double-centralizer core, and the distinguished-subsystem geometry of the
// exceptional two-label orbits.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "magical/classify.hpp"
#include "magical/matlie.hpp"
#include "matlie_internal.hpp"

namespace magical {
namespace {

using Element = LieModel::Element;

// Reduced-echelon span with incremental insertion, for closure and
// membership computations.
class IncrementalSpan {
 public:
  // Returns true when v was independent of the current span (and adds it).
  bool add(Element v) {
    reduce(v);
    int lead = leading_index(v);
    if (lead < 0) return false;
    Rational inv = Rational(1) / v[lead];
    for (Rational& c : v) c *= inv;
    for (std::size_t r = 0; r < m_rows.size(); ++r)
      if (m_rows[r][lead] != 0)
        detail::add_scaled(m_rows[r], v, -m_rows[r][lead]);
    auto pos = std::upper_bound(m_leads.begin(), m_leads.end(), lead);
    m_rows.insert(m_rows.begin() + (pos - m_leads.begin()), std::move(v));
    m_leads.insert(pos, lead);
    return true;
  }

  bool contains(Element v) const {
    reduce(v);
    return leading_index(v) < 0;
  }

  int dimension() const { return static_cast<int>(m_rows.size()); }
  const std::vector<Element>& rows() const { return m_rows; }

 private:
  static int leading_index(const Element& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) return static_cast<int>(k);
    return -1;
  }

  void reduce(Element& v) const {
    for (std::size_t r = 0; r < m_rows.size(); ++r)
      if (v[m_leads[r]] != 0)
        detail::add_scaled(v, m_rows[r], -v[m_leads[r]]);
  }

  std::vector<Element> m_rows;   // leading coefficient 1, sorted by lead
  std::vector<int> m_leads;
};

// Exponents of the simple type with the given rank and dimension, or
// nullopt when no simple type matches.
std::optional<std::vector<int>> exponents_by_rank_and_dim(int rank, int dim) {
  std::vector<int> out;
  if (rank >= 1 && dim == rank * (rank + 2)) {
    for (int i = 1; i <= rank; ++i) out.push_back(i);
    return out;
  }
  if (rank >= 2 && dim == rank * (2 * rank + 1)) {
    for (int i = 1; i <= rank; ++i) out.push_back(2 * i - 1);
    return out;
  }
  if (rank >= 3 && dim == rank * (2 * rank - 1)) {
    for (int i = 1; i <= rank - 1; ++i) out.push_back(2 * i - 1);
    out.push_back(rank - 1);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (rank == 2 && dim == 14) return std::vector<int>{1, 5};
  if (rank == 4 && dim == 52) return std::vector<int>{1, 5, 7, 11};
  if (rank == 6 && dim == 78) return std::vector<int>{1, 4, 5, 7, 8, 11};
  if (rank == 7 && dim == 133)
    return std::vector<int>{1, 5, 7, 9, 11, 13, 17};
  if (rank == 8 && dim == 248)
    return std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29};
  return std::nullopt;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << "}";
  return out.str();
}

}  // namespace

bool StructureReport::all_passed() const {
  for (const StructureCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

DoubleCentralizer centralizer_of_centralizer(const LieModel& g,
                                             const Sl2Triple& t) {
  if (!is_magical_oracle(g, t).magical)
    throw std::invalid_argument(
        "the centralizer tower is only computed for magical triples in " +
        g.name());
  const int d = g.dimension();
  detail::TripleChains tc = detail::build_triple_chains(g, t);

  // c: the trivial summands, i.e. the weight-0 lowering-chain heads.
  std::vector<Element> cvecs;
  if (auto it = tc.chains.find(0); it != tc.chains.end())
    for (const auto& chain : it->second) cvecs.push_back(chain[0]);

  // z(c), one ad_h weight block at a time (z(c) is ad_h-stable and the
  // c-brackets preserve each block, so the blocks can be cut down
  // independently; this also keeps every kernel problem block-sized).
  std::vector<Element> zz;
  for (const auto& [w, idxs] : tc.blocks) {
    std::vector<Element> live;
    for (int k : idxs) live.push_back(g.basis_element(k));
    for (const Element& cb : cvecs) {
      if (live.empty()) break;
      RationalMatrix m = linalg::zero_matrix<Rational>(
          static_cast<int>(idxs.size()), static_cast<int>(live.size()));
      for (std::size_t l = 0; l < live.size(); ++l) {
        Element img = g.bracket(cb, live[l]);
        for (std::size_t r = 0; r < idxs.size(); ++r)
          m[r][l] = std::move(img[idxs[r]]);
      }
      std::vector<Element> next;
      for (const auto& combo : linalg::kernel_basis(
               std::move(m), static_cast<int>(live.size()))) {
        Element v(d, Rational(0));
        for (std::size_t l = 0; l < live.size(); ++l)
          if (combo[l] != 0) detail::add_scaled(v, live[l], combo[l]);
        next.push_back(std::move(v));
      }
      live = std::move(next);
    }
    for (Element& v : live) zz.push_back(std::move(v));
  }

  // The derived part of z(c) splits off its center and carries the triple.
  DoubleCentralizer out;
  out.centralizer_dimension = static_cast<int>(cvecs.size());
  IncrementalSpan derived;
  for (std::size_t i = 0; i < zz.size(); ++i)
    for (std::size_t j = i + 1; j < zz.size(); ++j) {
      Element br = g.bracket(zz[i], zz[j]);
      if (!detail::is_zero_element(br) && derived.add(br))
        out.subalgebra_basis.push_back(std::move(br));
    }
  out.center_dimension =
      static_cast<int>(zz.size()) - derived.dimension();
  if (!derived.contains(t.f) || !derived.contains(t.h) ||
      !derived.contains(t.e))
    throw std::logic_error(
        "triple escaped the derived double centralizer in " + g.name());
  return out;
}

namespace {

// Everything check (b) learns about the double-centralizer core; reused by
// the exceptional checks.
struct CoreData {
  bool valid = false;
  std::string failure;
  int dim = 0;
  int rank = 0;           // dimension of the core's weight-0 block
  std::vector<int> half_weights;  // m per summand of the restricted action
  int trivial_summands = 0;
};

CoreData analyze_core(const LieModel& g, const Sl2Triple& t,
                      const detail::TripleChains& tc,
                      const DoubleCentralizer& dc) {
  CoreData core;
  const int d = g.dimension();
  core.dim = dc.subalgebra_dimension();

  // Weight-homogeneous pieces of the core.
  std::map<int, std::vector<Element>> s_blocks;
  int homogeneous_total = 0;
  for (const auto& [w, idxs] : tc.blocks) {
    std::vector<Element> units;
    for (int k : idxs) units.push_back(g.basis_element(k));
    std::vector<Element> piece =
        linalg::intersect_spans(dc.subalgebra_basis, units);
    homogeneous_total += static_cast<int>(piece.size());
    if (!piece.empty()) s_blocks[w] = std::move(piece);
  }
  if (homogeneous_total != core.dim) {
    core.failure = "core is not spanned by weight-homogeneous vectors";
    return core;
  }
  auto s0 = s_blocks.find(0);
  core.rank = s0 == s_blocks.end() ? 0 : static_cast<int>(s0->second.size());

  // Restricted highest-weight multiplicities: kernels of ad_e from one
  // core block to the next.
  for (const auto& [w, piece] : s_blocks) {
    if (w < 0) continue;
    if (w % 2 != 0) {
      core.failure = "core has an odd-weight block";
      return core;
    }
    const auto up = s_blocks.find(w + 2);
    const int k2 = up == s_blocks.end() ? 0
                                        : static_cast<int>(up->second.size());
    RationalMatrix target = linalg::zero_matrix<Rational>(d, k2);
    for (int c = 0; c < k2; ++c)
      for (int r = 0; r < d; ++r) target[r][c] = up->second[c][r];
    RationalMatrix restricted = linalg::zero_matrix<Rational>(
        k2, static_cast<int>(piece.size()));
    for (std::size_t l = 0; l < piece.size(); ++l) {
      Element img = g.bracket(t.e, piece[l]);
      if (k2 == 0) {
        if (!detail::is_zero_element(img)) {
          core.failure = "core is not closed under the raising operator";
          return core;
        }
        continue;
      }
      auto coords = linalg::solve(target, img);
      if (!coords) {
        core.failure = "core is not closed under the raising operator";
        return core;
      }
      for (int r = 0; r < k2; ++r) restricted[r][static_cast<int>(l)] =
          (*coords)[r];
    }
    const int kernel_dim = static_cast<int>(
        linalg::kernel_basis(std::move(restricted),
                             static_cast<int>(piece.size()))
            .size());
    if (w == 0)
      core.trivial_summands = kernel_dim;
    else
      for (int copy = 0; copy < kernel_dim; ++copy)
        core.half_weights.push_back(w / 2);
  }
  std::sort(core.half_weights.begin(), core.half_weights.end());
  core.valid = true;
  return core;
}

}  // namespace

StructureReport verify_structure(const ChevalleyModel& cm,
                                 const Sl2Triple& t) {
  const LieModel& g = cm.model;
  const RootSystem& rs = cm.roots;
  if (!is_magical_oracle(g, t).magical)
    throw std::invalid_argument(
        "structural checks are only run for magical triples in " + g.name());
  StructureReport report;
  detail::TripleChains tc = detail::build_triple_chains(g, t);

  // --- slice brackets: with Z_{2m} = ad_f^m(V_{2m}), every [Z_{2m}, Z_{2m}]
  // lands in the triple centralizer and [Z_{2m}, Z_{2m'}] = 0 for m != m'.
  {
    IncrementalSpan centralizer;
    if (auto it = tc.chains.find(0); it != tc.chains.end())
      for (const auto& chain : it->second) centralizer.add(chain[0]);
    std::map<int, std::vector<const Element*>> slices;  // m -> basis of Z_{2m}
    bool ok = true;
    std::string fail;
    for (const auto& [j, chains] : tc.chains) {
      if (j == 0) continue;
      if (j % 2 != 0) {
        ok = false;
        fail = "decomposition has an odd summand";
        break;
      }
      for (const auto& chain : chains) slices[j / 2].push_back(&chain[j / 2]);
    }
    long long pairs = 0;
    for (auto i1 = slices.begin(); ok && i1 != slices.end(); ++i1)
      for (auto i2 = i1; ok && i2 != slices.end(); ++i2)
        for (const Element* u : i1->second) {
          for (const Element* v : i2->second) {
            Element br = g.bracket(*u, *v);
            ++pairs;
            if (i1->first == i2->first ? !centralizer.contains(br)
                                       : !detail::is_zero_element(br)) {
              ok = false;
              std::ostringstream msg;
              msg << "bracket of slices m=" << i1->first << ", m="
                  << i2->first << " escapes";
              fail = msg.str();
              break;
            }
          }
          if (!ok) break;
        }
    std::ostringstream detail_text;
    if (ok)
      detail_text << pairs << " slice bracket(s) checked against a "
                  << centralizer.dimension() << "-dimensional centralizer";
    else
      detail_text << fail;
    report.checks.push_back({"slice brackets", ok, detail_text.str()});
  }

  // --- principal core: the triple sits in the derived double centralizer
  // as a principal triple (no trivial restricted summands, restricted
  // half-weights equal to the core's exponents).
  DoubleCentralizer dc = centralizer_of_centralizer(g, t);
  CoreData core = analyze_core(g, t, tc, dc);
  {
    bool ok = core.valid;
    std::ostringstream detail_text;
    if (!core.valid) {
      detail_text << core.failure;
    } else {
      auto expected = exponents_by_rank_and_dim(core.rank, core.dim);
      if (!expected) {
        ok = false;
        detail_text << "no simple type has rank " << core.rank
                    << " and dimension " << core.dim;
      } else if (core.trivial_summands != 0) {
        ok = false;
        detail_text << "restricted action has " << core.trivial_summands
                    << " trivial summand(s)";
      } else if (core.half_weights != *expected) {
        ok = false;
        detail_text << "restricted half-weights " << join_ints(core.half_weights)
                    << " do not match the exponents " << join_ints(*expected);
      } else {
        detail_text << "core has dimension " << core.dim << " and rank "
                    << core.rank << "; restricted half-weights "
                    << join_ints(core.half_weights)
                    << " match its exponents; center has dimension "
                    << dc.center_dimension;
      }
    }
    report.checks.push_back({"principal core", ok, detail_text.str()});
  }

  // --- exceptional two-label orbits: recognize the diagram, then verify
  // the distinguished D4 subsystem and the cubic identities.
  std::optional<DynkinLabels> labels;
  {
    const int r = rs.rank();
    bool in_cartan = true;
    for (int k = r; k < g.dimension(); ++k)
      if (t.h[k] != 0) in_cartan = false;
    if (in_cartan) {
      DynkinLabels l;
      bool integral = true;
      for (int i = 0; i < r && integral; ++i) {
        Rational v(0);
        for (int j = 0; j < r; ++j) v += Rational(rs.cartan[i][j]) * t.h[j];
        if (v.get_den() != 1)
          integral = false;
        else
          l.labels.push_back(static_cast<int>(v.get_num().get_si()));
      }
      if (integral) labels = std::move(l);
    }
  }
  bool exceptional_row = false;
  if (labels && rs.rank() <= 8)
    for (const CatalogEntry& entry : magical_catalog(8))
      if (entry.id.which == MagicalCase::case4 && entry.id.type == rs.type &&
          entry.labels == *labels)
        exceptional_row = true;
  if (!exceptional_row) return report;

  const int r = rs.rank();
  const int num_pos = static_cast<int>(rs.positive_roots.size());
  std::vector<int> root_weight(num_pos, 0);
  for (int k = 0; k < num_pos; ++k)
    for (int i = 0; i < r; ++i)
      root_weight[k] += rs.positive_roots[k][i] * labels->labels[i];

  // The distinguished simple root: the unique weight-10 and weight-8 root
  // spaces differ by it.
  int top10 = -1, top8 = -1;
  bool unique = true;
  for (int k = 0; k < num_pos; ++k) {
    if (root_weight[k] == 10) {
      if (top10 >= 0) unique = false;
      top10 = k;
    } else if (root_weight[k] == 8) {
      if (top8 >= 0) unique = false;
      top8 = k;
    }
  }

  int node = -1;     // positive-root index of the distinguished simple root
  int partner = -1;  // positive-root index of the other label-2 simple root
  std::vector<RootCoords> quad;  // D4 simple system
  {
    bool ok = unique && top10 >= 0 && top8 >= 0;
    std::string fail;
    if (!ok) fail = "weight-10/8 spaces are not lines";
    int node_simple = -1;  // Cartan-node index of the distinguished root
    if (ok) {
      RootCoords diff(r, 0);
      for (int i = 0; i < r; ++i)
        diff[i] = rs.positive_roots[top10][i] - rs.positive_roots[top8][i];
      // The difference must be a simple root (a coordinate unit vector;
      // the node index and the positive-root index differ, since positive
      // roots are ordered by height then lexicographically).
      bool is_unit = true;
      for (int i = 0; i < r; ++i) {
        if (diff[i] == 0) continue;
        if (diff[i] != 1 || node_simple >= 0) is_unit = false;
        node_simple = i;
      }
      node = rs.index_of(diff);
      if (!is_unit || node_simple < 0 || node < 0 ||
          labels->labels[node_simple] != 2) {
        ok = false;
        fail = "distinguished root is not a label-2 simple root";
      }
    }
    if (ok) {
      int partner_simple = -1;
      for (int i = 0; i < r; ++i)
        if (i != node_simple && labels->labels[i] == 2) {
          if (partner_simple >= 0) {
            ok = false;
            fail = "more than two label-2 nodes";
          }
          partner_simple = i;
        }
      if (partner_simple < 0) {
        ok = false;
        fail = "second label-2 node is missing";
      } else {
        RootCoords unit(r, 0);
        unit[partner_simple] = 1;
        partner = rs.index_of(unit);
      }
    }
    if (ok) {
      // Find the two remaining arms: weight-2 roots of the node's length,
      // attached to the node, orthogonal to the partner and to each other.
      const RootCoords& alpha = rs.positive_roots[node];
      const RootCoords& beta1 = rs.positive_roots[partner];
      std::vector<int> arms;
      for (int k = 0; k < num_pos; ++k) {
        if (root_weight[k] != 2 || k == node || k == partner) continue;
        const RootCoords& c = rs.positive_roots[k];
        if (rs.norm2_of(c) != rs.norm2_of(alpha)) continue;
        if (2 * rs.inner(c, alpha) != -rs.norm2_of(alpha)) continue;
        if (rs.inner(c, beta1) != 0) continue;
        RootCoords sum(r), d1(r);
        for (int i = 0; i < r; ++i) {
          sum[i] = c[i] + alpha[i];
          d1[i] = c[i] - alpha[i];
        }
        if (rs.index_of(sum) < 0 || rs.is_root(d1)) continue;
        arms.push_back(k);
      }
      int arm2 = -1, arm3 = -1;
      for (std::size_t x = 0; x < arms.size() && arm2 < 0; ++x)
        for (std::size_t y = x + 1; y < arms.size() && arm2 < 0; ++y) {
          const RootCoords& cx = rs.positive_roots[arms[x]];
          const RootCoords& cy = rs.positive_roots[arms[y]];
          if (rs.inner(cx, cy) != 0) continue;
          RootCoords sum(r), diff(r);
          for (int i = 0; i < r; ++i) {
            sum[i] = cx[i] + cy[i];
            diff[i] = cx[i] - cy[i];
          }
          if (rs.is_root(sum) || rs.is_root(diff)) continue;
          arm2 = arms[x];
          arm3 = arms[y];
        }
      if (arm2 < 0) {
        ok = false;
        fail = "no orthogonal pair of arm roots";
      } else {
        quad = {alpha, beta1, rs.positive_roots[arm2],
                rs.positive_roots[arm3]};
      }
    }
    if (ok) {
      // Close the four root-space pairs under brackets; the result must be
      // a 28-dimensional subalgebra containing all twelve positive roots of
      // the D4 subsystem.
      IncrementalSpan closure;
      std::vector<Element> work;
      for (const RootCoords& root : quad) {
        int idx = rs.index_of(root);
        work.push_back(g.basis_element(r + idx));
        work.push_back(g.basis_element(r + num_pos + idx));
      }
      for (const Element& v : work) closure.add(v);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Element> rows = closure.rows();
        for (std::size_t i = 0; i < rows.size() && !grew; ++i)
          for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (closure.add(g.bracket(rows[i], rows[j]))) {
              grew = true;
              break;
            }
      }
      if (closure.dimension() != 28) {
        ok = false;
        std::ostringstream msg;
        msg << "subsystem closure has dimension " << closure.dimension()
            << ", expected 28";
        fail = msg.str();
      } else {
        // All twelve positive subsystem roots: the four simples, the node
        // plus any nonempty subset of arms, and the doubled-node root.
        std::vector<RootCoords> subsystem = quad;
        for (int mask = 1; mask < 8; ++mask) {
          RootCoords c = quad[0];
          for (int b = 0; b < 3; ++b)
            if (mask & (1 << b))
              for (int i = 0; i < r; ++i) c[i] += quad[1 + b][i];
          subsystem.push_back(std::move(c));
        }
        RootCoords full = quad[0];
        for (int i = 0; i < r; ++i)
          full[i] += quad[0][i] + quad[1][i] + quad[2][i] + quad[3][i];
        subsystem.push_back(std::move(full));
        for (const RootCoords& root : subsystem) {
          int idx = rs.index_of(root);
          if (idx < 0 ||
              !closure.contains(g.basis_element(r + idx)) ||
              !closure.contains(g.basis_element(r + num_pos + idx))) {
            ok = false;
            fail = "a subsystem root space is missing from the closure";
            break;
          }
        }
      }
    }
    report.checks.push_back(
        {"so8 closure", ok,
         ok ? "four root-space pairs close to a 28-dimensional subalgebra "
              "containing all twelve positive subsystem roots"
            : fail});
  }

  // --- core summands: for these orbits the core is the 14-dimensional
  // rank-2 algebra with summand half-weights {1, 5}.
  {
    bool ok = core.valid && core.dim == 14 && core.rank == 2 &&
              core.half_weights == std::vector<int>{1, 5};
    std::ostringstream detail_text;
    if (ok)
      detail_text << "core is 14-dimensional of rank 2 with half-weights "
                     "{1,5}";
    else if (core.valid)
      detail_text << "core has dimension " << core.dim << ", rank "
                  << core.rank << ", half-weights "
                  << join_ints(core.half_weights);
    else
      detail_text << core.failure;
    report.checks.push_back({"core summands", ok, detail_text.str()});
  }

  // --- cubic identities on the split f = f_b + f_t, with f_t the component
  // on the distinguished root space and f_b the rest.
  if (node >= 0) {
    const int f_node = r + num_pos + node;
    Element f_t = g.zero();
    f_t[f_node] = t.f[f_node];
    Element f_b = t.f;
    f_b[f_node] = 0;

    Element cube = g.bracket(f_b, g.bracket(f_b, g.bracket(f_b, f_t)));
    bool nonzero = !detail::is_zero_element(cube);
    bool parts = !detail::is_zero_element(f_t) &&
                 !detail::is_zero_element(f_b);
    report.checks.push_back(
        {"cubic nonvanishing", nonzero && parts,
         nonzero && parts
             ? "both components of f are nonzero and the triple bracket "
               "ad_{f_b}^3 moves the distinguished component to a nonzero "
               "weight -8 vector"
             : "the triple bracket ad_{f_b}^3 annihilates the "
               "distinguished component"});

    bool ok = true;
    int tested = 0;
    auto it6 = tc.chains.find(6);
    if (it6 != tc.chains.end()) {
      const Element fb_ft = g.bracket(f_b, f_t);
      for (const auto& chain : it6->second) {
        const Element& phi = chain[0];
        Element arg = f_b;
        detail::add_scaled(arg, phi, Rational(1));
        Element lhs = g.bracket(arg, g.bracket(arg, g.bracket(arg, f_t)));
        Element rhs = cube;
        Element f3 =
            g.bracket(t.f, g.bracket(t.f, g.bracket(t.f, phi)));
        detail::add_scaled(rhs, f3, Rational(3));
        Element tail = g.bracket(phi, g.bracket(phi, fb_ft));
        detail::add_scaled(rhs, tail, Rational(1));
        ++tested;
        for (int k = 0; k < g.dimension(); ++k)
          if (lhs[k] != rhs[k]) ok = false;
        if (!ok) break;
      }
    }
    std::ostringstream detail_text;
    if (ok)
      detail_text << "cubic expansion holds on all " << tested
                  << " highest-weight vectors of weight 6";
    else
      detail_text << "cubic expansion fails on a weight-6 highest-weight "
                     "vector";
    report.checks.push_back({"cubic expansion", ok, detail_text.str()});
  }

  return report;
}

}  // namespace magical
