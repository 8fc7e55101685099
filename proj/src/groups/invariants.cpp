#include "rlab/groups/invariants.hpp"

#include <stdexcept>

#include "rlab/exact/snf.hpp"
#include "rlab/groups/perm.hpp"

namespace rlab {

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.rank());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (std::size_t j = 0; j < p.rank(); ++j) m(i, j) = p.relators()[i].exponent_sum(p.generators()[j]);
  return m;
}

std::vector<BigInt> abelianization(const Presentation& p) { return abelian_invariants(relation_matrix(p)); }

std::size_t betti_number(const Presentation& p) { return free_rank(abelianization(p)); }

SubgroupRecord make_subgroup_record(const Presentation& p, const CosetTable& table) {
  SubgroupRecord rec;
  rec.index = table.index();
  rec.table = table;
  SubgroupPresentation sp = reidemeister_schreier(p, table);
  rec.invariants = abelianization(sp.presentation);
  rec.generators = sp.generator_words;
  rec.normal = is_normal(table);
  std::vector<Perm> perms;
  for (std::size_t g = 0; g < p.rank(); ++g) perms.push_back(table.permutation(g));
  rec.core_index = perm_group_order(table.index(), perms);
  return rec;
}

SubgroupListing low_index_subgroups(const Presentation& p, std::size_t max_index, std::size_t min_index,
                                    bool normal_only, long max_nodes) {
  LowIndexOptions opt;
  opt.max_index = max_index;
  opt.min_index = min_index;
  opt.normal_only = normal_only;
  opt.max_nodes = max_nodes;
  LowIndexResult r = low_index_tables(p, opt);
  SubgroupListing out;
  out.complete = r.complete;
  out.nodes = r.nodes;
  for (const auto& t : r.tables) out.records.push_back(make_subgroup_record(p, t));
  return out;
}

bool table_contains(const Presentation& p, const CosetTable& outer, const CosetTable& inner) {
  SubgroupPresentation sp = reidemeister_schreier(p, inner, false);
  for (const auto& w : sp.generator_words)
    if (outer.trace(0, p.encode(w)) != 0) return false;
  return true;
}

std::vector<BigRational> luck_sequence(const Presentation& p, const std::vector<CosetTable>& chain) {
  std::vector<BigRational> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const CosetTable& t = chain[i];
    if (!t.complete()) throw std::invalid_argument("luck_sequence: table " + std::to_string(i) + " is incomplete");
    if (!t.relators_close(p))
      throw std::invalid_argument("luck_sequence: table " + std::to_string(i) + " is not a coset table of the group");
    if (i > 0 && !table_contains(p, chain[i - 1], t))
      throw std::invalid_argument("luck_sequence: chain is not nested at position " + std::to_string(i));
    SubgroupPresentation sp = reidemeister_schreier(p, t);
    std::size_t b1 = betti_number(sp.presentation);
    out.push_back(make_rational(BigInt(static_cast<unsigned long>(b1)), BigInt(static_cast<unsigned long>(t.index()))));
  }
  return out;
}

}  // namespace rlab
