#include "rlab/groups/rewriting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rlab {

namespace {

using Word = std::vector<int>;

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == inverse_letter(w[b - 1])) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = inverse_letter(l);
  return out;
}

// Least rotation of w or its inverse, used to detect duplicate relators.
Word cyclic_key(const Word& w) {
  Word best = w;
  for (const Word& v : {w, invert(w)})
    for (std::size_t k = 0; k < v.size(); ++k) {
      Word rot(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      if (rot < best) best = rot;
    }
  return best;
}

Presentation build(const std::string& name, const std::vector<std::string>& names, const std::vector<int>& alive,
                   const std::vector<Word>& rels) {
  std::vector<std::string> gens;
  std::map<int, std::string> idx;
  for (int g : alive) {
    gens.push_back(names[g]);
    idx[g] = names[g];
  }
  std::vector<GroupWord> out;
  for (const auto& r : rels) {
    std::vector<Syllable> s;
    for (int l : r) s.push_back({idx.at(l / 2), (l & 1) ? -1L : 1L});
    out.emplace_back(std::move(s));
  }
  return Presentation(name, gens, out);
}

}  // namespace

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& table, bool simplify,
                                           const TietzeOptions& tietze) {
  if (!table.complete() || !table.consistent())
    throw std::invalid_argument("reidemeister_schreier: coset table is not complete");
  if (table.rank() != p.rank()) throw std::invalid_argument("reidemeister_schreier: table rank mismatch");
  int n = static_cast<int>(table.index()), k = static_cast<int>(p.rank());
  // Spanning tree from first appearances in row-major order.
  std::vector<int> parent(n, -1), parent_letter(n, -1);
  std::vector<Word> tree(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<int> order{0};
  for (std::size_t a = 0; a < order.size(); ++a) {
    int c = order[a];
    for (int x = 0; x < 2 * k; ++x) {
      int d = table.act(c, x);
      if (seen[d]) continue;
      seen[d] = true;
      parent[d] = c;
      parent_letter[d] = x;
      tree[d] = tree[c];
      tree[d].push_back(x);
      order.push_back(d);
    }
  }
  // Schreier generator for each non-tree edge c --g--> d, g a positive generator.
  std::vector<int> gen_id(static_cast<std::size_t>(n) * k, -1);
  std::vector<std::string> names;
  std::vector<GroupWord> words;
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < k; ++g) {
      int d = table.act(c, 2 * g);
      bool tree_edge = (parent[d] == c && parent_letter[d] == 2 * g) || (parent[c] == d && parent_letter[c] == 2 * g + 1);
      if (tree_edge) continue;
      gen_id[c * k + g] = static_cast<int>(names.size());
      names.push_back("s" + std::to_string(names.size() + 1));
      Word w = tree[c];
      w.push_back(2 * g);
      Word back = invert(tree[d]);
      w.insert(w.end(), back.begin(), back.end());
      words.push_back(p.decode(free_reduce(w)));
    }
  std::vector<Word> rels;
  for (const auto& rel : p.relators()) {
    Word r = p.encode(rel);
    for (int c = 0; c < n; ++c) {
      Word out;
      int cur = c;
      for (int l : r) {
        int g = l / 2;
        if ((l & 1) == 0) {
          int id = gen_id[cur * k + g];
          if (id >= 0) out.push_back(2 * id);
          cur = table.act(cur, l);
        } else {
          int prev = table.act(cur, l);
          int id = gen_id[prev * k + g];
          if (id >= 0) out.push_back(2 * id + 1);
          cur = prev;
        }
      }
      rels.push_back(out);
    }
  }
  std::vector<int> alive(names.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  std::string name = (p.name().empty() ? "G" : p.name()) + "_sub" + std::to_string(n);
  SubgroupPresentation sp{Presentation(name, names, {}), words};
  // Relators may be trivial after rewriting; build drops those.
  sp.presentation = build(name, names, alive, rels);
  return simplify ? tietze_simplify(sp, tietze) : sp;
}

SubgroupPresentation tietze_simplify(const SubgroupPresentation& sp, const TietzeOptions& options) {
  const Presentation& p = sp.presentation;
  std::vector<std::string> names = p.generators();
  int ng = static_cast<int>(names.size());
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(p.encode(r));
  std::vector<bool> eliminated(ng, false);

  auto normalize = [&] {
    std::set<Word> keys;
    std::vector<Word> out;
    for (auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (keys.insert(cyclic_key(c)).second) out.push_back(std::move(c));
    }
    rels = std::move(out);
  };

  normalize();
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Candidate (relator, generator) with the generator occurring exactly once.
    int best_r = -1, best_g = -1;
    std::size_t best_len = 0;
    long best_occ = 0;
    std::vector<long> occurrences(ng, 0);
    for (const auto& r : rels)
      for (int l : r) occurrences[l / 2]++;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      std::vector<int> count(ng, 0);
      for (int l : rels[ri]) count[l / 2]++;
      for (int g = 0; g < ng; ++g) {
        if (count[g] != 1) continue;
        std::size_t len = rels[ri].size();
        if (best_r < 0 || len < best_len || (len == best_len && occurrences[g] < best_occ)) {
          best_r = static_cast<int>(ri);
          best_g = g;
          best_len = len;
          best_occ = occurrences[g];
        }
      }
    }
    if (best_r < 0) break;
    // Rotate so the generator comes first: g^e W = 1, hence g = W^-1 (e = 1) or g = W (e = -1).
    Word r = rels[best_r];
    std::size_t pos = 0;
    while (r[pos] / 2 != best_g) ++pos;
    Word rot(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word rest(rot.begin() + 1, rot.end());
    Word value = (rot[0] & 1) ? rest : invert(rest);
    Word value_inv = invert(value);
    long total = 0;
    std::vector<Word> next;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (static_cast<int>(ri) == best_r) continue;
      Word out;
      for (int l : rels[ri]) {
        if (l / 2 != best_g) {
          out.push_back(l);
        } else {
          const Word& v = (l & 1) ? value_inv : value;
          out.insert(out.end(), v.begin(), v.end());
        }
      }
      total += static_cast<long>(out.size());
      next.push_back(std::move(out));
    }
    if (total > options.max_total_length) break;
    rels = std::move(next);
    eliminated[best_g] = true;
    normalize();
  }

  std::vector<int> alive;
  std::vector<GroupWord> words;
  for (int g = 0; g < ng; ++g)
    if (!eliminated[g]) {
      alive.push_back(g);
      words.push_back(sp.generator_words.at(g));
    }
  std::vector<std::string> all_names(ng);
  for (int g = 0; g < ng; ++g) all_names[g] = names[g];
  return {build(p.name(), all_names, alive, rels), words};
}

}  // namespace rlab
