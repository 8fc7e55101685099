#include "rlab/groups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace rlab {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

GroupWord w(const std::string& text) { return parse_word(text); }

}  // namespace

Presentation::Presentation(std::string name, std::vector<std::string> generators, std::vector<GroupWord> relators)
    : name_(std::move(name)), gens_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!valid_symbol(g)) throw std::invalid_argument("invalid generator symbol '" + g + "'");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
  }
  for (auto& r : relators) {
    for (const auto& syl : r.syllables())
      if (!seen.count(syl.gen))
        throw std::invalid_argument("relator " + r.to_string() + " uses unknown generator '" + syl.gen + "'");
    GroupWord c = r.cyclically_reduced();
    if (!c.empty()) rels_.push_back(std::move(c));
  }
}

std::size_t Presentation::generator_index(const std::string& gen) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == gen) return i;
  throw std::invalid_argument("unknown generator '" + gen + "'");
}

std::vector<int> Presentation::encode(const GroupWord& word) const {
  std::vector<int> out;
  for (const auto& syl : word.syllables()) {
    int g = static_cast<int>(generator_index(syl.gen));
    int letter = syl.exp > 0 ? 2 * g : 2 * g + 1;
    for (long k = 0; k < std::labs(syl.exp); ++k) out.push_back(letter);
  }
  return out;
}

GroupWord Presentation::decode(const std::vector<int>& letters) const {
  std::vector<Syllable> s;
  for (int l : letters) s.push_back({gens_.at(l / 2), (l & 1) ? -1L : 1L});
  return GroupWord(std::move(s));
}

std::vector<std::vector<std::vector<int>>> Presentation::rotations_by_letter() const {
  std::vector<std::vector<std::vector<int>>> out(2 * gens_.size());
  for (const auto& rel : rels_) {
    std::vector<int> r = encode(rel);
    std::vector<int> inv(r.rbegin(), r.rend());
    for (int& l : inv) l = inverse_letter(l);
    for (const auto& w : {r, inv})
      for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        auto& bucket = out[rot[0]];
        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
      }
  }
  return out;
}

Presentation Presentation::with_relators(const std::vector<GroupWord>& extra, const std::string& name) const {
  std::vector<GroupWord> rels = rels_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(name.empty() ? name_ : name, gens_, rels);
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "group " << (name_.empty() ? "G" : name_) << ' ';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << '\n';
  for (const auto& r : rels_) os << "rel " << r.to_string() << '\n';
  return os.str();
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::string name;
  std::vector<std::string> gens;
  std::vector<GroupWord> rels;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    if (trim(body).empty()) continue;
    std::size_t start = body.find_first_not_of(" \t");
    std::size_t kw_end = body.find_first_of(" \t", start);
    std::string kw = body.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
    std::size_t arg_pos = kw_end == std::string::npos ? body.size() : body.find_first_not_of(" \t", kw_end);
    if (arg_pos == std::string::npos) arg_pos = body.size();
    if (kw == "group") {
      if (have_header) throw PresentationParseError("duplicate group header", lineno, start + 1);
      std::istringstream hs(body.substr(arg_pos));
      std::string gen_list;
      if (!(hs >> name)) throw PresentationParseError("missing group name", lineno, arg_pos + 1);
      std::getline(hs, gen_list);
      std::size_t list_col = body.find(gen_list, arg_pos + name.size());
      gen_list = trim(gen_list);
      if (gen_list.empty()) throw PresentationParseError("missing generator list", lineno, body.size() + 1);
      std::size_t pos = 0;
      while (pos <= gen_list.size()) {
        std::size_t comma = gen_list.find(',', pos);
        std::string g = trim(gen_list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!valid_symbol(g))
          throw PresentationParseError("invalid generator symbol '" + g + "'", lineno, list_col + pos + 1);
        for (const auto& h : gens)
          if (h == g) throw PresentationParseError("duplicate generator '" + g + "'", lineno, list_col + pos + 1);
        gens.push_back(g);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      have_header = true;
    } else if (kw == "rel") {
      if (!have_header) throw PresentationParseError("relator before group header", lineno, start + 1);
      GroupWord r;
      try {
        r = parse_word(body.substr(arg_pos));
      } catch (const WordParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at column"));
        throw PresentationParseError(msg, lineno, arg_pos + e.column);
      }
      for (const auto& syl : r.syllables()) {
        bool known = false;
        for (const auto& g : gens) known = known || g == syl.gen;
        if (!known) {
          std::size_t col = body.find(syl.gen, arg_pos);
          if (col == std::string::npos) col = arg_pos;
          throw PresentationParseError("unknown generator '" + syl.gen + "'", lineno, col + 1);
        }
      }
      rels.push_back(std::move(r));
    } else {
      throw PresentationParseError("expected 'group' or 'rel', found '" + kw + "'", lineno, start + 1);
    }
  }
  if (!have_header) throw PresentationParseError("missing group header", lineno == 0 ? 1 : lineno, 1);
  return Presentation(name, gens, rels);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

Presentation figure_eight() {
  // (a b^-1 a^-1 b) a (b^-1 a b a^-1) = b
  return Presentation("figure8", {"a", "b"}, {w("a b^-1 a^-1 b a b^-1 a b a^-1 b^-1")});
}

Presentation delta(int n) {
  if (n < 1) throw std::invalid_argument("delta: n must be positive");
  return figure_eight().with_relators({GroupWord::letter("a", n)}, "delta" + std::to_string(n));
}

Presentation fibonacci(int m) {
  if (m < 3) throw std::invalid_argument("fibonacci: need at least 3 generators");
  std::vector<std::string> gens;
  for (int i = 1; i <= m; ++i) gens.push_back("x" + std::to_string(i));
  std::vector<GroupWord> rels;
  for (int i = 0; i < m; ++i)
    rels.push_back(GroupWord({{gens[i], 1}, {gens[(i + 1) % m], 1}, {gens[(i + 2) % m], -1}}));
  return Presentation("fib" + std::to_string(m), gens, rels);
}

Presentation gamma4() {
  return Presentation("gamma4", {"a", "b"},
                      {w("b a^-2 b a^-1 b^2 a b^2 a^-1"), w("a^2 b a b^2 a b a^2 b^-1")});
}

Presentation gamma_empty() {
  return Presentation("gamma-empty", {"x", "y", "z"},
                      {w("x^2"), w("y^2"), w("z^2"), w("(x y z)^4"), w("(x y x y x z)^2"), w("(y z x z)^2")});
}

Presentation metacyclic25(int k) {
  return Presentation("metacyclic25_" + std::to_string(k), {"x", "t"},
                      {w("x^25"), w("t^-1 x t") * GroupWord::letter("x", -k)});
}

Presentation free_group(int rank) {
  if (rank < 0 || rank > 26) throw std::invalid_argument("free_group: rank out of range");
  std::vector<std::string> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(std::string(1, static_cast<char>('a' + i)));
  return Presentation("free" + std::to_string(rank), gens, {});
}

Presentation surface_group(int genus) {
  if (genus < 1) throw std::invalid_argument("surface_group: genus must be positive");
  std::vector<std::string> gens;
  GroupWord rel;
  for (int i = 1; i <= genus; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    gens.push_back(a);
    gens.push_back(b);
    rel = rel * GroupWord({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return Presentation("surface" + std::to_string(genus), gens, {rel});
}

Presentation fixture(const std::string& name) {
  std::smatch m;
  static const std::regex numbered("(delta|fib|free|surface)([0-9]+)");
  if (name == "figure8") return figure_eight();
  if (name == "gamma4") return gamma4();
  if (name == "gamma4-a2") return gamma4().with_relators({w("a^2")}, name);
  if (name == "gamma4-a3") return gamma4().with_relators({w("a^3")}, name);
  if (name == "gamma-empty") return gamma_empty();
  if (name == "b1") return Presentation("b1", metacyclic25(6).generators(), metacyclic25(6).relators());
  if (name == "b2") return Presentation("b2", metacyclic25(11).generators(), metacyclic25(11).relators());
  if (std::regex_match(name, m, numbered)) {
    int n = std::stoi(m[2]);
    if (m[1] == "delta") return delta(n);
    if (m[1] == "fib") return fibonacci(n);
    if (m[1] == "free") return free_group(n);
    return surface_group(n);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"figure8", "delta2", "delta3", "delta4", "delta5", "fib8", "gamma4", "gamma4-a2", "gamma4-a3",
          "gamma-empty", "b1", "b2", "free2", "free3", "surface2"};
}

}  // namespace rlab
