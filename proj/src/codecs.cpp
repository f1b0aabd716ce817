#include "taitkit/codecs.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace taitkit {

namespace {

/// Character cursor that tracks 1-based line and column.
class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  bool done() const { return pos_ >= src_.size(); }
  char peek() const { return done() ? '\0' : src_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blanks(bool newlines = true) {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())) && (newlines || peek() != '\n')) take();
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, column_, what); }

  void expect(char c) {
    skip_blanks();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  int integer() {
    skip_blanks();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer label");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > 1'000'000'000) fail("label out of range");
    }
    if (value == 0) fail("labels must be positive");
    return static_cast<int>(value);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::vector<PdTuple> parse_bracketed(Cursor& in) {
  std::vector<PdTuple> out;
  in.expect('P');
  in.expect('D');
  in.expect('[');
  in.skip_blanks();
  if (in.peek() == ']') {
    in.take();
  } else {
    for (;;) {
      in.expect('X');
      in.expect('[');
      PdTuple t{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0) {
          in.skip_blanks();
          if (in.peek() == ']') in.fail("X-term has " + std::to_string(i) + " labels, expected 4");
          in.expect(',');
        }
        t[i] = in.integer();
      }
      in.skip_blanks();
      if (in.peek() == ',') in.fail("X-term has more than 4 labels");
      in.expect(']');
      out.push_back(t);
      in.skip_blanks();
      if (in.peek() == ',') {
        in.take();
        continue;
      }
      in.expect(']');
      break;
    }
  }
  in.skip_blanks();
  if (!in.done()) in.fail("trailing input after PD[...]");
  return out;
}

std::vector<PdTuple> parse_lines(Cursor& in) {
  std::vector<PdTuple> out;
  for (;;) {
    in.skip_blanks();
    if (in.done()) break;
    PdTuple t{};
    const std::size_t line = in.line();
    for (int i = 0; i < 4; ++i) {
      in.skip_blanks(false);
      if (in.done() || in.peek() == '\n') in.fail("line " + std::to_string(line) + " has " + std::to_string(i) + " labels, expected 4");
      t[i] = in.integer();
    }
    in.skip_blanks(false);
    if (!in.done() && in.peek() != '\n') in.fail("more than 4 labels on a line");
    out.push_back(t);
  }
  return out;
}

struct Pass {
  int crossing;
  bool over;
  int sign;
};

}  // namespace

std::vector<PdTuple> parse_pd_text(std::string_view src) {
  Cursor in(src);
  in.skip_blanks();
  if (in.peek() == 'P') return parse_bracketed(in);
  return parse_lines(in);
}

Diagram parse_gauss(std::string_view src) {
  Cursor in(src);
  std::vector<std::vector<Pass>> components;
  std::map<int, int> index_of_label;
  for (;;) {
    in.skip_blanks();
    if (in.done()) break;
    std::vector<Pass> passes;
    while (!in.done() && in.peek() != '\n') {
      const char kind = in.peek();
      if (kind == ' ' || kind == '\t' || kind == ',' || kind == '\r') {
        in.take();
        continue;
      }
      if (kind != 'O' && kind != 'U') in.fail("expected 'O' or 'U'");
      in.take();
      const int label = in.integer();
      const char sign = in.peek();
      if (sign != '+' && sign != '-') in.fail("expected crossing sign '+' or '-'");
      in.take();
      auto [it, inserted] = index_of_label.try_emplace(label, static_cast<int>(index_of_label.size()));
      passes.push_back({it->second, kind == 'O', sign == '+' ? 1 : -1});
    }
    if (!passes.empty()) components.push_back(std::move(passes));
  }
  if (components.empty()) throw SyntaxError(in.line(), in.column(), "empty Gauss code");

  const int n = static_cast<int>(index_of_label.size());
  std::vector<int> over_count(n, 0), under_count(n, 0), sign(n, 0);
  for (const auto& comp : components)
    for (const Pass& p : comp) {
      (p.over ? over_count : under_count)[p.crossing]++;
      if (sign[p.crossing] != 0 && sign[p.crossing] != p.sign)
        throw Error(ErrorKind::NonRealizable, "crossing signs disagree between its two passes");
      sign[p.crossing] = p.sign;
    }
  for (int c = 0; c < n; ++c)
    if (over_count[c] != 1 || under_count[c] != 1)
      throw Error(ErrorKind::NonRealizable, "every crossing must be passed once over and once under");

  // Slots: understrand enters at 0 and leaves at 2; the overstrand enters at 3
  // for a positive crossing and at 1 for a negative one.
  auto in_slot = [&](const Pass& p) { return p.over ? (p.sign > 0 ? 3 : 1) : 0; };
  auto out_slot = [&](const Pass& p) { return p.over ? (p.sign > 0 ? 1 : 3) : 2; };

  MapData data;
  data.partner.assign(4 * n, -1);
  data.outgoing.assign(4 * n, 0);
  data.over_odd.assign(n, 1);
  for (const auto& comp : components)
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Pass& a = comp[i];
      const Pass& b = comp[(i + 1) % comp.size()];
      const DartId tail = Diagram::dart_at(a.crossing, out_slot(a));
      const DartId head = Diagram::dart_at(b.crossing, in_slot(b));
      data.partner[tail] = head;
      data.partner[head] = tail;
      data.outgoing[tail] = 1;
    }
  try {
    return Diagram::from_map(std::move(data));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonPlanar) throw Error(ErrorKind::NonRealizable, std::string("Gauss code has no sphere embedding: ") + e.what());
    throw;
  }
}

std::vector<PdTuple> to_pd_tuples(const Diagram& d) {
  std::vector<int> label(d.edge_count(), 0);
  int next = 1;
  for (const auto& comp : d.components())
    for (EdgeId e : comp) label[e] = next++;
  std::vector<PdTuple> out;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int under_base = d.over_odd(c) ? 0 : 1;
    const int a = d.outgoing(Diagram::dart_at(c, under_base)) ? under_base + 2 : under_base;
    PdTuple t{};
    for (int i = 0; i < 4; ++i) t[i] = label[d.edge_of(Diagram::dart_at(c, a + i))];
    out.push_back(t);
  }
  return out;
}

std::string serialize_pd(const Diagram& d) {
  std::ostringstream os;
  os << "PD[";
  const auto tuples = to_pd_tuples(d);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) os << ',';
    os << "X[" << tuples[i][0] << ',' << tuples[i][1] << ',' << tuples[i][2] << ',' << tuples[i][3] << ']';
  }
  os << ']';
  return os.str();
}

std::string serialize_gauss(const Diagram& d) {
  const auto signs = crossing_signs(d);
  std::ostringstream os;
  for (int comp = 0; comp < static_cast<int>(d.components().size()); ++comp) {
    if (comp) os << '\n';
    for (DartId h : d.component_passes(comp)) {
      const CrossingId c = Diagram::crossing_of(h);
      os << (d.is_over(h) ? 'O' : 'U') << c + 1 << (signs[c] > 0 ? '+' : '-');
    }
  }
  return os.str();
}

std::vector<DiagramDocument> parse_table(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("table is not valid JSON: ") + e.what());
  }
  if (!root.is_array()) throw Error(ErrorKind::Schema, "table must be a JSON array");

  std::vector<DiagramDocument> docs;
  docs.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& entry = root[i];
    if (!entry.is_object()) throw SchemaError(i, "entry is not an object");
    if (!entry.contains("name") || !entry["name"].is_string()) throw SchemaError(i, "missing string field 'name'");
    if (!entry.contains("pd") || !entry["pd"].is_array()) throw SchemaError(i, "missing array field 'pd'");
    std::vector<PdTuple> pd;
    for (const auto& x : entry["pd"]) {
      if (!x.is_array() || x.size() != 4) throw SchemaError(i, "every pd element must hold 4 integers");
      PdTuple t{};
      for (int k = 0; k < 4; ++k) {
        if (!x[k].is_number_integer()) throw SchemaError(i, "pd labels must be integers");
        t[k] = x[k].get<int>();
      }
      pd.push_back(t);
    }
    std::map<std::string, std::string> tags;
    if (entry.contains("tags")) {
      if (!entry["tags"].is_object()) throw SchemaError(i, "'tags' must be an object");
      for (const auto& [key, value] : entry["tags"].items()) {
        if (!value.is_string()) throw SchemaError(i, "tag '" + key + "' is not a string");
        tags[key] = value.get<std::string>();
      }
    }
    try {
      Diagram diagram = build_from_crossing_list(pd);
      docs.push_back({entry["name"].get<std::string>(), std::move(pd), std::move(tags), std::move(diagram)});
    } catch (const Error& e) {
      throw SchemaError(i, std::string(to_string(e.kind())) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<DiagramDocument> load_table(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot open table " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw Error(ErrorKind::Io, "failed reading " + path.string());
  return parse_table(buffer.str());
}

}  // namespace taitkit
