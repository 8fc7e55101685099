#include "rlab/fingerprint/fingerprint.hpp"

#include <algorithm>
#include <set>

#include "rlab/groups/low_index.hpp"

namespace rlab {

namespace {

// Standardized coset table of the trivial subgroup in the regular action.
CosetTable regular_table(const FiniteQuotient& q) {
  std::size_t r = q.rank(), n = q.order();
  std::vector<int> data(n * 2 * r);
  for (std::size_t g = 0; g < r; ++g) {
    Perm p = q.generator(g);
    for (std::size_t c = 0; c < n; ++c) {
      data[c * 2 * r + 2 * g] = p[c];
      data[p[c] * 2 * r + 2 * g + 1] = static_cast<int>(c);
    }
  }
  return CosetTable(r, n, std::move(data)).standardized();
}

void add_class(QuotientFingerprint& fp, FiniteQuotient q, std::size_t iso_bound) {
  int i = fp.find(q, iso_bound);
  if (i >= 0)
    fp.classes[i].multiplicity++;
  else
    fp.classes.push_back({std::move(q), 1});
}

}  // namespace

int QuotientFingerprint::find(const FiniteQuotient& q, std::size_t iso_bound) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].group.invariants() == q.invariants() && iso_test(classes[i].group, q, iso_bound))
      return static_cast<int>(i);
  return -1;
}

QuotientFingerprint quotients_up_to(const Presentation& p, std::size_t bound, const FingerprintOptions& options) {
  if (bound < 1) throw std::invalid_argument("quotients_up_to: bound must be at least 1");
  if (bound > options.iso_bound)
    throw std::invalid_argument("quotients_up_to: bound " + std::to_string(bound) + " exceeds the isomorphism bound " +
                                std::to_string(options.iso_bound));
  QuotientFingerprint fp;
  fp.bound = bound;
  LowIndexOptions lo;
  lo.max_index = bound;
  lo.max_nodes = options.max_nodes;
  lo.normal_only = options.route == QuotientRoute::Normal;
  LowIndexResult res = low_index_tables(p, lo);
  fp.complete = res.complete;
  fp.nodes = res.nodes;
  if (!res.complete)
    fp.diagnostics = "subgroup search for " + (p.name().empty() ? std::string("G") : p.name()) + " stopped after " +
                     std::to_string(res.nodes) + " nodes (budget " + std::to_string(options.max_nodes) +
                     ") at bound " + std::to_string(bound);

  if (options.route == QuotientRoute::Normal) {
    for (const auto& t : res.tables) add_class(fp, FiniteQuotient::from_regular_table(t), options.iso_bound);
  } else {
    std::set<CosetTable> cores;
    for (const auto& t : res.tables) {
      std::vector<Perm> gens;
      for (std::size_t g = 0; g < t.rank(); ++g) gens.push_back(t.permutation(g));
      auto q = FiniteQuotient::from_permutations(gens, bound);
      if (!q) continue;
      if (cores.insert(regular_table(*q)).second) add_class(fp, std::move(*q), options.iso_bound);
    }
  }
  std::stable_sort(fp.classes.begin(), fp.classes.end(), [](const QuotientClass& a, const QuotientClass& b) {
    return a.group.invariants() < b.group.invariants();
  });
  return fp;
}

std::string to_string(Side s) { return s == Side::G ? "G" : "H"; }

CompareResult compare_fingerprints(const QuotientFingerprint& g, const QuotientFingerprint& h, std::size_t iso_bound) {
  if (!g.complete || !h.complete) {
    std::string msg = "compare: refusing partial fingerprint";
    if (!g.complete) msg += "; G: " + g.diagnostics;
    if (!h.complete) msg += "; H: " + h.diagnostics;
    throw IncompleteFingerprint(msg);
  }
  if (g.bound != h.bound) throw std::invalid_argument("compare: fingerprints have different bounds");
  CompareResult out;
  out.bound = g.bound;
  // Classes are sorted, so the first unmatched class on each side is its least.
  auto least_unmatched = [&](const QuotientFingerprint& mine, const QuotientFingerprint& other) {
    std::optional<FiniteQuotient> r;
    for (const auto& c : mine.classes)
      if (other.find(c.group, iso_bound) < 0) {
        r = c.group;
        break;
      }
    return r;
  };
  out.only_g = least_unmatched(g, h);
  out.only_h = least_unmatched(h, g);
  out.equal = !out.only_g && !out.only_h;
  if (out.only_g && (!out.only_h || !(out.only_h->invariants() < out.only_g->invariants()))) {
    out.distinguisher = out.only_g;
    out.side = Side::G;
  } else if (out.only_h) {
    out.distinguisher = out.only_h;
    out.side = Side::H;
  }
  return out;
}

CompareResult compare(const Presentation& g, const Presentation& h, std::size_t bound,
                      const FingerprintOptions& options) {
  auto fg = quotients_up_to(g, bound, options);
  auto fh = quotients_up_to(h, bound, options);
  return compare_fingerprints(fg, fh, options.iso_bound);
}

}  // namespace rlab
