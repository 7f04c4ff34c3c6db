#include "gfit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "corpus_data.hpp"
#include "gfit/errors.hpp"

namespace gfit {

const AutomorphismMap &CorpusEntry::automorphism(std::string_view auto_name) const {
  for (const auto &a : automorphisms)
    if (a.name() == auto_name)
      return a;
  throw ValidationError("group " + name + " has no automorphism named " + std::string(auto_name));
}

namespace {

Permutation cycle_on(std::size_t degree, std::vector<Point> pts) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i)
    images[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i)
    images[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(std::move(images));
}

Permutation full_cycle(std::size_t degree, Point from) {
  std::vector<Point> pts;
  for (Point i = from; i < degree; ++i)
    pts.push_back(i);
  return cycle_on(degree, pts);
}

void check_range(const std::string &family, long long n, long long lo, long long hi) {
  if (n < lo || n > hi)
    throw ValidationError(family + ": parameter " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
}

CorpusEntry make_entry(std::string name, std::vector<Permutation> gens) {
  CorpusEntry e;
  e.name = std::move(name);
  e.group = Group::close(std::move(gens));
  e.provenance = "builtin";
  return e;
}

CorpusEntry cyclic(long long n) {
  check_range("cyclic", n, 1, 1000);
  auto e = make_entry("cyclic(" + std::to_string(n) + ")", {full_cycle(static_cast<std::size_t>(n), 0)});
  if (n >= 3)
    e.automorphisms.push_back(
        AutomorphismMap::make(e.group, {e.group->generators().front().inverse()}, "inversion"));
  return e;
}

CorpusEntry dihedral(long long n) {
  check_range("dihedral", n, 3, 1000);
  const auto d = static_cast<std::size_t>(n);
  std::vector<Point> refl(d);
  for (Point i = 0; i < d; ++i)
    refl[i] = static_cast<Point>(d - 1 - i);
  return make_entry("dihedral(" + std::to_string(n) + ")", {full_cycle(d, 0), Permutation(std::move(refl))});
}

void attach_transposition(CorpusEntry &e, std::size_t n) {
  if (n >= 3)
    e.automorphisms.push_back(AutomorphismMap::inner(e.group, cycle_on(n, {0, 1}), "transposition"));
}

CorpusEntry symmetric(long long n) {
  check_range("symmetric", n, 1, 7);
  const auto d = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (d == 1)
    gens.push_back(Permutation::identity(1));
  else
    gens = {cycle_on(d, {0, 1}), full_cycle(d, 0)};
  if (d == 2)
    gens.pop_back();
  auto e = make_entry("symmetric(" + std::to_string(n) + ")", std::move(gens));
  attach_transposition(e, d);
  return e;
}

CorpusEntry alternating(long long n) {
  check_range("alternating", n, 1, 7);
  const auto d = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (d < 3) {
    gens.push_back(Permutation::identity(d));
  } else {
    gens.push_back(cycle_on(d, {0, 1, 2}));
    if (d > 3)
      gens.push_back(d % 2 == 1 ? full_cycle(d, 0) : full_cycle(d, 1));
  }
  auto e = make_entry("alternating(" + std::to_string(n) + ")", std::move(gens));
  attach_transposition(e, d);
  return e;
}

// SL(2, p) acting on the row vectors of F_p^2 \ {0}; vector (a, b) is point
// a*p + b (0-based, after dropping the zero vector).
CorpusEntry sl2(long long p) {
  if (p != 3 && p != 5 && p != 7)
    throw ValidationError("sl2: p must be 3, 5 or 7, got " + std::to_string(p));
  const auto q = static_cast<std::size_t>(p);
  auto as_perm = [q](std::size_t m00, std::size_t m01, std::size_t m10, std::size_t m11) {
    std::vector<Point> images(q * q - 1);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        if (a == 0 && b == 0)
          continue;
        std::size_t x = (a * m00 + b * m10) % q;
        std::size_t y = (a * m01 + b * m11) % q;
        images[a * q + b - 1] = static_cast<Point>(x * q + y - 1);
      }
    return Permutation(std::move(images));
  };
  return make_entry("sl2(" + std::to_string(p) + ")", {as_perm(1, 1, 0, 1), as_perm(0, q - 1, 1, 0)});
}

CorpusEntry direct_product(const CorpusEntry &a, const CorpusEntry &b) {
  const std::size_t da = a.group->degree();
  const std::size_t db = b.group->degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.group->generators())
    gens.push_back(g.extended(da + db));
  for (const auto &g : b.group->generators())
    gens.push_back(g.shifted(da));
  return make_entry("direct_product(" + a.name + "," + b.name + ")", std::move(gens));
}

// Recursive-descent reader for family specs.
class SpecReader {
public:
  explicit SpecReader(std::string_view text) : text_(text) {}

  CorpusEntry read_entry() {
    std::string family = identifier();
    expect('(');
    CorpusEntry out;
    if (family == "direct_product") {
      CorpusEntry a = read_entry();
      expect(',');
      CorpusEntry b = read_entry();
      out = direct_product(a, b);
    } else if (family == "holomorph_ext") {
      CorpusEntry a = read_entry();
      expect(',');
      std::string auto_name = identifier();
      const auto &alpha = a.automorphism(auto_name);
      out.name = "holomorph_ext(" + a.name + "," + auto_name + ")";
      out.group = holomorph_extension(alpha);
      out.provenance = "builtin";
    } else {
      long long n = integer();
      if (family == "cyclic")
        out = cyclic(n);
      else if (family == "dihedral")
        out = dihedral(n);
      else if (family == "symmetric")
        out = symmetric(n);
      else if (family == "alternating")
        out = alternating(n);
      else if (family == "sl2")
        out = sl2(n);
      else
        throw ParseError("unknown group family \"" + family + "\"");
    }
    expect(')');
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing text in family spec \"" + std::string(text_) + "\"");
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_) + " in \"" +
                       std::string(text_) + "\"");
    ++pos_;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a name at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    return std::string(text_.substr(start, pos_ - start));
  }
  long long integer() {
    std::string tok = identifier();
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        tok.size() > 9)
      throw ParseError("expected an integer, got \"" + tok + "\"");
    return std::stoll(tok);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

} // namespace

CorpusEntry builtin(std::string_view spec) {
  SpecReader reader(spec);
  CorpusEntry e = reader.read_entry();
  reader.finish();
  return e;
}

CorpusEntry parse_group_file(std::string_view text, std::string provenance) {
  struct PendingAuto {
    std::string name;
    std::size_t line;
    std::vector<Permutation> maps;
  };
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<PendingAuto> autos;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string &msg) -> void {
    throw ParseError(provenance + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty())
      continue;
    auto space = line.find_first_of(" \t");
    std::string key = line.substr(0, space);
    std::string value = space == std::string::npos ? "" : trim(std::string_view(line).substr(space));
    if (key == "name") {
      if (value.empty() || value.find_first_of(" \t") != std::string::npos)
        fail("name must be a single identifier");
      name = value;
    } else if (key == "degree") {
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(c); }) ||
          value.size() > 6)
        fail("degree must be a positive integer");
      degree = std::stoul(value);
      if (degree == 0)
        fail("degree must be a positive integer");
    } else if (key == "gen") {
      if (degree == 0)
        fail("gen before degree");
      if (!autos.empty())
        fail("gen after the first auto block");
      try {
        gens.push_back(parse_cycles(value, degree));
      } catch (const ParseError &e) {
        fail(e.what());
      }
    } else if (key == "auto") {
      if (gens.empty())
        fail("auto before any gen");
      if (value.empty())
        fail("auto needs a name");
      autos.push_back({value, lineno, {}});
    } else if (key == "map") {
      if (autos.empty())
        fail("map outside an auto block");
      try {
        autos.back().maps.push_back(parse_cycles(value, degree));
      } catch (const ParseError &e) {
        fail(e.what());
      }
    } else {
      fail("unknown directive \"" + key + "\"");
    }
  }
  if (name.empty())
    throw ParseError(provenance + ": missing name");
  if (gens.empty())
    throw ParseError(provenance + ": no generators");

  CorpusEntry e;
  e.name = name;
  e.provenance = provenance;
  e.group = Group::close(gens);
  std::set<std::string> auto_names;
  for (auto &a : autos) {
    if (!auto_names.insert(a.name).second)
      throw ParseError(provenance + ":" + std::to_string(a.line) + ": duplicate automorphism " + a.name);
    if (a.maps.size() != gens.size())
      throw ParseError(provenance + ":" + std::to_string(a.line) + ": automorphism " + a.name + " has " +
                       std::to_string(a.maps.size()) + " map lines for " + std::to_string(gens.size()) +
                       " generators");
    e.automorphisms.push_back(AutomorphismMap::make(e.group, std::move(a.maps), a.name));
  }
  return e;
}

std::string serialize_group_file(const CorpusEntry &entry) {
  std::ostringstream os;
  os << "name " << entry.name << "\n";
  os << "degree " << entry.group->degree() << "\n";
  for (const auto &g : entry.group->generators())
    os << "gen " << format_cycles(g) << "\n";
  for (const auto &a : entry.automorphisms) {
    os << "auto " << a.name() << "\n";
    for (const auto &m : a.images())
      os << "map " << format_cycles(m) << "\n";
  }
  return os.str();
}

namespace {

void sort_and_check_unique(std::vector<CorpusEntry> &entries) {
  std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].name == entries[i - 1].name)
      throw ValidationError("duplicate corpus entry name " + entries[i].name);
}

} // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path &directory) {
  if (!std::filesystem::is_directory(directory))
    throw ValidationError(directory.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto &item : std::filesystem::directory_iterator(directory))
    if (item.is_regular_file() && item.path().extension() == ".grp")
      files.push_back(item.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> entries;
  for (const auto &f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    entries.push_back(parse_group_file(buf.str(), f.string()));
  }
  sort_and_check_unique(entries);
  return entries;
}

std::vector<std::string> small_std_builtin_specs() {
  return {
      "cyclic(1)",
      "cyclic(2)",
      "cyclic(5)",
      "cyclic(12)",
      "dihedral(4)",
      "dihedral(5)",
      "dihedral(6)",
      "symmetric(3)",
      "symmetric(4)",
      "symmetric(5)",
      "symmetric(6)",
      "symmetric(7)",
      "alternating(4)",
      "alternating(5)",
      "alternating(6)",
      "alternating(7)",
      "sl2(3)",
      "sl2(5)",
      "sl2(7)",
      "direct_product(alternating(5),alternating(5))",
      "direct_product(symmetric(3),cyclic(5))",
      "holomorph_ext(cyclic(7),inversion)",
      "holomorph_ext(alternating(5),transposition)",
  };
}

std::vector<CorpusEntry> small_std_corpus() {
  std::vector<CorpusEntry> entries;
  for (const auto &spec : small_std_builtin_specs())
    entries.push_back(builtin(spec));
  for (const auto &[file, text] : detail::small_std_files())
    entries.push_back(parse_group_file(text, "corpus/small-std/" + std::string(file)));
  sort_and_check_unique(entries);
  return entries;
}

NamedCorpus load_corpus_selector(const std::string &selector) {
  const std::string prefix = "builtin:";
  if (selector.rfind(prefix, 0) == 0) {
    std::string rest = selector.substr(prefix.size());
    if (rest == "small-std")
      return {"small-std", small_std_corpus()};
    CorpusEntry e = builtin(rest);
    std::string name = e.name;
    return {name, {std::move(e)}};
  }
  std::filesystem::path p(selector);
  if (std::filesystem::is_directory(p)) {
    auto stem = p.filename().empty() ? p.parent_path().filename() : p.filename();
    return {stem.string(), load_corpus(p)};
  }
  if (std::filesystem::is_regular_file(p)) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    auto e = parse_group_file(buf.str(), p.string());
    return {p.stem().string(), {std::move(e)}};
  }
  throw ValidationError("corpus selector \"" + selector + "\" is neither builtin:<...>, a directory, nor a file");
}

} // namespace gfit
