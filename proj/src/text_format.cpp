#include "qhull/text_format.hpp"

#include <fstream>
#include <sstream>

#include "qhull/error.hpp"

namespace qhull {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      lines_.push_back({number, raw.substr(first, last - first + 1)});
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() {
    if (done()) error("unexpected end of input");
    return lines_[pos_++];
  }
  [[noreturn]] void error(const std::string& what) const {
    const std::size_t line = done() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[pos_].number;
    fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
  }

  // `key value` on one line.
  std::string keyed(std::string_view key) {
    const auto& l = next();
    if (l.text.rfind(key, 0) != 0 || (l.text.size() > key.size() && l.text[key.size()] != ' '))
      fail(ErrorKind::Parse, "line " + std::to_string(l.number) + ": expected '" + std::string(key) + "'");
    return l.text.size() > key.size() ? l.text.substr(key.size() + 1) : std::string();
  }

  std::size_t number(std::string_view key) {
    const auto value = keyed(key);
    try {
      std::size_t used = 0;
      const auto n = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      return n;
    } catch (const std::exception&) {
      error("'" + std::string(key) + "' needs a number");
    }
  }

  // `key` followed by `rows` rows of `cols` indices below `bound`; the first
  // row may share the key line.
  std::vector<std::vector<Elem>> table(std::string_view key, std::size_t rows, std::size_t cols, std::size_t bound) {
    std::vector<Elem> flat;
    std::istringstream head(keyed(key));
    read_row(head, flat, bound);
    while (flat.size() < rows * cols) {
      std::istringstream row(next().text);
      read_row(row, flat, bound);
    }
    if (flat.size() != rows * cols) error("'" + std::string(key) + "' table has the wrong size");
    std::vector<std::vector<Elem>> out(rows, std::vector<Elem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = flat[i * cols + j];
    return out;
  }

  void read_row(std::istringstream& in, std::vector<Elem>& flat, std::size_t bound) {
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) error("bad index '" + token + "'");
      if (v >= bound) error("index " + token + " out of range");
      flat.push_back(static_cast<Elem>(v));
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void write_rows(std::ostringstream& out, const char* key, std::size_t rows, std::size_t cols,
                const std::function<Elem(std::size_t, std::size_t)>& at) {
  out << key << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out << (j ? " " : "") << at(i, j);
    out << '\n';
  }
}

}  // namespace

RingPtr Document::ring(std::string_view name) const {
  for (const auto& r : rings)
    if (r->name() == name) return r;
  return nullptr;
}

ModulePtr Document::module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return m.module;
  if (name == "R" && rings.size() == 1) return regular_module(rings.front());
  return nullptr;
}

Document parse_document(std::string_view text) {
  Reader in(text);
  Document doc;
  while (!in.done()) {
    const auto& head = in.peek();
    if (head.text.rfind("ring ", 0) == 0) {
      const auto name = in.keyed("ring");
      if (doc.ring(name)) in.error("duplicate ring '" + name + "'");
      const auto n = in.number("order");
      if (n == 0) in.error("order must be positive");
      const auto one = in.number("one");
      if (one >= n) in.error("'one' out of range");
      const auto add = in.table("add", n, n, n);
      const auto mul = in.table("mul", n, n, n);
      doc.rings.push_back(validate_ring(name, add, mul, static_cast<Elem>(one)));
      if (!in.done() && in.peek().text.rfind("embed", 0) == 0) {
        std::istringstream values(in.keyed("embed"));
        std::vector<Elem> ignored;
        in.read_row(values, ignored, n);
      }
    } else if (head.text.rfind("module ", 0) == 0) {
      const auto decl = in.keyed("module");
      const auto over = decl.rfind(" over ");
      if (over == std::string::npos) in.error("expected 'module <name> over <ring>'");
      const auto name = decl.substr(0, over);
      const auto ring = doc.ring(decl.substr(over + 6));
      if (!ring) in.error("unknown ring '" + decl.substr(over + 6) + "'");
      const auto m = in.number("order");
      if (m == 0) in.error("order must be positive");
      std::string label = name;
      if (!in.done() && in.peek().text.rfind("label ", 0) == 0) label = in.keyed("label");
      const auto add = in.table("add", m, m, m);
      auto act = in.table("act", m, ring->order(), m);
      auto validated = module_from_action_labeled(ring, add, act, label);
      Document::NamedModule entry{name, validated.module, {}};
      if (!in.done() && in.peek().text.rfind("embed", 0) == 0) {
        std::istringstream values(in.keyed("embed"));
        std::vector<Elem> raw;
        in.read_row(values, raw, m);
        for (auto v : raw) entry.embed.push_back(validated.from_label[v]);
      }
      doc.modules.push_back(std::move(entry));
    } else {
      in.error("expected 'ring' or 'module'");
    }
  }
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) fail(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_document(buffer.str());
}

std::string write_ring(const FiniteRing& r) {
  std::ostringstream out;
  const auto n = r.order();
  out << "ring " << r.name() << "\norder " << n << "\none " << r.one() << '\n';
  write_rows(out, "add", n, n, [&](std::size_t i, std::size_t j) { return r.add(i, j); });
  write_rows(out, "mul", n, n, [&](std::size_t i, std::size_t j) { return r.mul(i, j); });
  return out.str();
}

std::string write_module(const RightModule& m, const std::vector<Elem>* embed) {
  std::ostringstream out;
  const auto n = m.order();
  out << "module " << m.label() << " over " << m.ring()->name() << "\norder " << n << '\n';
  write_rows(out, "add", n, n, [&](std::size_t i, std::size_t j) { return m.add(i, j); });
  write_rows(out, "act", n, m.ring()->order(), [&](std::size_t i, std::size_t j) { return m.act(i, j); });
  if (embed) {
    out << "embed";
    for (auto v : *embed) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string write_hull(const HullResult& h) {
  auto block = write_module(*h.hull, &h.embedding.table());
  const auto first_break = block.find('\n');
  const auto second_break = block.find('\n', first_break + 1);
  block.insert(second_break + 1, "label " + h.hull->label() + "\n");
  return block;
}

std::string write_quotient_ring(const QuotientRingResult& q) {
  std::ostringstream out;
  out << write_ring(*q.q) << "embed";
  for (auto v : q.embedding.map) out << ' ' << v;
  out << '\n';
  return out.str();
}

}  // namespace qhull
