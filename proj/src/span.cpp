#include "globop/span.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace globop {

namespace {

// Cell payload grammar (the color rides in front as "c1!"/"c2!"):
//   set:    s{0,1}
//   span:   p[SET>SET]{ELT;ELT;...}
//   map:    m[SPAN>SPAN]{ELT->ELT;...}
//   3-cell: d3[MAP]
// Apex elements:
//   atom (a,b) from a subset span, i(a) from an identity span,
//   <e1,e2> from a pullback.

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c))
      throw EvalError("span cell parse error at " + std::to_string(pos) +
                      " in " + s);
  }
  int number() {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw EvalError("span cell parse: expected number in " + s);
    return std::stoi(s.substr(start, pos - start));
  }

  // Scans one element; returns its text span.
  std::string element() {
    size_t start = pos;
    if (eat('i')) {
      expect('(');
      number();
      expect(')');
    } else if (eat('(')) {
      number();
      expect(',');
      number();
      expect(')');
    } else if (eat('<')) {
      element();
      expect(',');
      element();
      expect('>');
    } else {
      throw EvalError("span cell parse: bad element in " + s);
    }
    return s.substr(start, pos - start);
  }

};

// Extent of one span payload "p[SET>SET]{ELTS}" starting at pos: sets carry
// no ']' and the element list no '}', so the delimiters are unambiguous.
size_t scan_span(const std::string& s, size_t pos) {
  if (s.compare(pos, 2, "p[") != 0)
    throw EvalError("span cell parse: expected span at " + std::to_string(pos) +
                    " in " + s);
  size_t close = s.find(']', pos);
  size_t open = s.find('{', close);
  size_t end = s.find('}', open);
  if (close == std::string::npos || open == std::string::npos ||
      end == std::string::npos)
    throw EvalError("span cell parse: unterminated span in " + s);
  return end + 1;
}

struct SetCell {
  std::vector<int> elems;
  std::string encode() const {
    std::string out = "s{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems[i]);
    }
    return out + "}";
  }
};

SetCell parse_set(const std::string& text) {
  Parser p(text);
  p.expect('s');
  p.expect('{');
  SetCell out;
  if (!p.eat('}')) {
    out.elems.push_back(p.number());
    while (p.eat(',')) out.elems.push_back(p.number());
    p.expect('}');
  }
  return out;
}

int leg(const std::string& elt, bool left) {
  Parser p(elt);
  std::function<std::pair<int, int>(void)> go = [&]() -> std::pair<int, int> {
    if (p.eat('i')) {
      p.expect('(');
      int v = p.number();
      p.expect(')');
      return {v, v};
    }
    if (p.eat('(')) {
      int a = p.number();
      p.expect(',');
      int b = p.number();
      p.expect(')');
      return {a, b};
    }
    p.expect('<');
    auto l = go();
    p.expect(',');
    auto r = go();
    p.expect('>');
    return {l.first, r.second};
  };
  auto [l, r] = go();
  return left ? l : r;
}

struct SpanCell {
  std::string src, tgt;  // set payloads
  std::vector<std::string> elems;

  std::string encode() const {
    std::string out = "p[" + src + ">" + tgt + "]{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ";";
      out += elems[i];
    }
    return out + "}";
  }
};

SpanCell parse_span(const std::string& text) {
  Parser p(text);
  p.expect('p');
  p.expect('[');
  SpanCell out;
  {
    // Sets contain neither '>' nor ']'.
    size_t start = p.pos;
    size_t gt = text.find('>', start);
    out.src = text.substr(start, gt - start);
    p.pos = gt + 1;
    size_t close = text.find(']', p.pos);
    out.tgt = text.substr(p.pos, close - p.pos);
    p.pos = close;
  }
  p.expect(']');
  p.expect('{');
  if (!p.eat('}')) {
    out.elems.push_back(p.element());
    while (p.eat(';')) out.elems.push_back(p.element());
    p.expect('}');
  }
  return out;
}

struct MapCell {
  std::string src, tgt;  // span payloads
  std::vector<std::pair<std::string, std::string>> graph;

  std::string encode() const {
    std::string out = "m[" + src + ">" + tgt + "]{";
    for (size_t i = 0; i < graph.size(); ++i) {
      if (i) out += ";";
      out += graph[i].first + "->" + graph[i].second;
    }
    return out + "}";
  }

  std::string apply(const std::string& elt) const {
    for (const auto& [from, to] : graph)
      if (from == elt) return to;
    throw EvalError("span map undefined on element " + elt);
  }
};

MapCell parse_map(const std::string& text) {
  Parser p(text);
  p.expect('m');
  p.expect('[');
  MapCell out;
  {
    size_t src_end = scan_span(text, p.pos);
    out.src = text.substr(p.pos, src_end - p.pos);
    p.pos = src_end;
    p.expect('>');
    size_t tgt_end = scan_span(text, p.pos);
    out.tgt = text.substr(p.pos, tgt_end - p.pos);
    p.pos = tgt_end;
  }
  p.expect(']');
  p.expect('{');
  if (!p.eat('}')) {
    auto arrow = [&]() {
      std::string from = p.element();
      p.expect('-');
      p.expect('>');
      std::string to = p.element();
      out.graph.emplace_back(from, to);
    };
    arrow();
    while (p.eat(';')) arrow();
    p.expect('}');
  }
  return out;
}

std::vector<std::string> flatten_elt(const std::string& elt) {
  if (elt[0] == 'i') return {};
  if (elt[0] == '(') return {elt};
  // <x,y>
  Parser p(elt);
  p.expect('<');
  std::string x = p.element();
  p.expect(',');
  std::string y = p.element();
  auto out = flatten_elt(x);
  auto rest = flatten_elt(y);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

class SpanAlgebra : public Algebra {
 public:
  SpanAlgebra(int max_set, int max_dim)
      : max_set_(max_set), max_dim_(max_dim), coll_(build_Cn(1, max_dim)) {}

  int level() const override { return 1; }
  const Collection& collection() const override { return coll_; }
  int max_dim() const override { return max_dim_; }
  int declared_dim() const override { return 2; }

  int color(int, const ACell& c) const override {
    if (c.rfind("c1!", 0) == 0) return 1;
    if (c.rfind("c2!", 0) == 0) return 2;
    throw EvalError("span cell without color: " + c);
  }

  ACell src(int dim, const ACell& c) const override { return bnd(dim, c, true); }
  ACell tgt(int dim, const ACell& c) const override { return bnd(dim, c, false); }

  std::vector<ACell> cells(int dim) const override {
    std::vector<ACell> out;
    for (int col = 1; col <= 2; ++col) {
      std::string pre = "c" + std::to_string(col) + "!";
      if (dim == 0) {
        for (const auto& s : seed_sets()) out.push_back(pre + s.encode());
      } else if (dim == 1) {
        for (const auto& sp : seed_spans()) out.push_back(pre + sp.encode());
      } else if (dim == 2) {
        for (const auto& sp : seed_spans())
          out.push_back(pre + identity_map(sp).encode());
      } else if (dim == 3) {
        for (const auto& sp : seed_spans())
          out.push_back(pre + "d3[" + identity_map(sp).encode() + "]");
      }
    }
    return out;
  }

  ACell interp(const Generator& g, const APasting& pi) const override {
    const std::string& name = g.name;
    bool binary = (name.rfind("mu_", 0) == 0) ||
                  (name.rfind("v_", 0) == 0 && name.find('^') != std::string::npos);
    if (binary) {
      int p = std::stoi(name.substr(name.find('_') + 1));
      return compose_pasting(pi, p, g.dim);
    }
    if (name.rfind("F^", 0) == 0) {
      // Identity pseudofunctor: recolor the payload.
      const ACell& x = pi.at(Sector{Tree::Addr(pi.tree.height(), 0), 0});
      return "c2!" + x.substr(3);
    }
    throw AlgebraGap("span algebra: no interpretation for " + name);
  }

  ACell fill(const ACell& lo, const ACell& hi, int level) const override {
    if (level == 0) {
      if (lo != hi) throw AlgebraGap("span fill at level 0 needs equal objects");
      SetCell a = parse_set(lo.substr(3));
      SpanCell id;
      id.src = id.tgt = lo.substr(3);
      for (int v : a.elems) id.elems.push_back("i(" + std::to_string(v) + ")");
      return lo.substr(0, 3) + id.encode();
    }
    if (level == 1) return mediator(lo, hi);
    if (level == 2) {
      if (lo != hi)
        throw AlgebraGap("span fill at level 2: distinct parallel 2-cells:\n  " +
                         lo + "\n  " + hi);
      return lo.substr(0, 3) + "d3[" + lo.substr(3) + "]";
    }
    throw AlgebraGap("span fill level out of range");
  }

  std::optional<ACell> degeneracy_base(int dim, const ACell& c) const override {
    if (dim == 3 && c.rfind("d3[", 3) == 3)
      return c.substr(0, 3) + c.substr(6, c.size() - 7);
    return std::nullopt;
  }

 private:
  std::vector<SetCell> seed_sets() const {
    std::vector<SetCell> out;
    out.emplace_back();  // the empty set
    for (int n = 1; n <= max_set_; ++n) {
      SetCell s;
      for (int v = 0; v < n; ++v) s.elems.push_back(v);
      out.push_back(s);
    }
    return out;
  }

  std::vector<SpanCell> seed_spans() const {
    // A deterministic family of subset spans between the seed sets.
    std::vector<SpanCell> out;
    auto add = [&](int na, int nb, std::vector<std::pair<int, int>> pairs) {
      SetCell a, b;
      for (int v = 0; v < na; ++v) a.elems.push_back(v);
      for (int v = 0; v < nb; ++v) b.elems.push_back(v);
      SpanCell sp;
      sp.src = a.encode();
      sp.tgt = b.encode();
      std::sort(pairs.begin(), pairs.end());
      for (auto [x, y] : pairs)
        sp.elems.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      out.push_back(sp);
    };
    add(1, 1, {{0, 0}});
    add(2, 2, {{0, 0}, {1, 1}});
    add(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    add(2, 1, {{0, 0}, {1, 0}});
    add(1, 2, {{0, 0}, {0, 1}});
    if (max_set_ >= 3) {
      add(3, 3, {{0, 0}, {1, 1}, {2, 2}});
      add(2, 3, {{0, 0}, {1, 1}, {1, 2}});
      add(3, 2, {{0, 0}, {1, 0}, {2, 1}});
    }
    return out;
  }

  MapCell identity_map(const SpanCell& sp) const {
    MapCell m;
    m.src = m.tgt = sp.encode();
    for (const auto& e : sp.elems) m.graph.emplace_back(e, e);
    return m;
  }

  ACell bnd(int dim, const ACell& c, bool source) const {
    std::string pre = c.substr(0, 3);
    std::string body = c.substr(3);
    if (dim == 1) {
      SpanCell sp = parse_span(body);
      return pre + (source ? sp.src : sp.tgt);
    }
    if (dim == 2) {
      MapCell m = parse_map(body.substr(0));
      return pre + (source ? m.src : m.tgt);
    }
    if (dim == 3) {
      return pre + body.substr(3, body.size() - 4);
    }
    throw EvalError("span boundary: bad dimension for " + c);
  }

  ACell compose_pasting(const APasting& pi, int p, int dim) const {
    Tree::Addr node(p, 0);
    Tree::Addr left = node, right = node;
    left.push_back(0);
    right.push_back(1);
    for (int d = p + 1; d < dim; ++d) {
      left.push_back(0);
      right.push_back(0);
    }
    return compose_at(pi.at(Sector{left, 0}), pi.at(Sector{right, 0}), p, dim);
  }

  ACell compose_at(const ACell& x, const ACell& y, int p, int dim) const {
    std::string pre = x.substr(0, 3);
    if (dim == 1) {
      SpanCell s = parse_span(x.substr(3)), t = parse_span(y.substr(3));
      SpanCell out;
      out.src = s.src;
      out.tgt = t.tgt;
      for (const auto& e : s.elems)
        for (const auto& f : t.elems)
          if (leg(e, false) == leg(f, true))
            out.elems.push_back("<" + e + "," + f + ">");
      std::sort(out.elems.begin(), out.elems.end());
      return pre + out.encode();
    }
    if (dim == 2) {
      MapCell phi = parse_map(x.substr(3)), psi = parse_map(y.substr(3));
      if (p == 1) {
        // Vertical: phi then psi.
        MapCell out;
        out.src = phi.src;
        out.tgt = psi.tgt;
        if (phi.tgt != psi.src)
          throw EvalError("span: vertical composition of non-chained maps");
        for (const auto& [from, mid] : phi.graph)
          out.graph.emplace_back(from, psi.apply(mid));
        return pre + out.encode();
      }
      // Horizontal at p = 0: pairwise on pullback elements.
      SpanCell srcspan = parse_span(phi.src), tgtspan = parse_span(phi.tgt);
      SpanCell srcspan2 = parse_span(psi.src), tgtspan2 = parse_span(psi.tgt);
      SpanCell news, newt;
      MapCell out;
      news.src = srcspan.src;
      news.tgt = srcspan2.tgt;
      newt.src = tgtspan.src;
      newt.tgt = tgtspan2.tgt;
      for (const auto& e : srcspan.elems)
        for (const auto& f : srcspan2.elems)
          if (leg(e, false) == leg(f, true)) {
            std::string from = "<" + e + "," + f + ">";
            std::string to = "<" + phi.apply(e) + "," + psi.apply(f) + ">";
            out.graph.emplace_back(from, to);
            news.elems.push_back(from);
          }
      for (const auto& e : tgtspan.elems)
        for (const auto& f : tgtspan2.elems)
          if (leg(e, false) == leg(f, true)) newt.elems.push_back("<" + e + "," + f + ">");
      std::sort(news.elems.begin(), news.elems.end());
      std::sort(newt.elems.begin(), newt.elems.end());
      std::sort(out.graph.begin(), out.graph.end());
      out.src = news.encode();
      out.tgt = newt.encode();
      return pre + out.encode();
    }
    // dim == 3: degeneracies of 2-cells.
    if (p == 2) {
      if (x != y) throw EvalError("span: distinct parallel 3-cells");
      return x;
    }
    ACell inner = compose_at(x.substr(0, 3) + x.substr(6, x.size() - 7),
                             y.substr(0, 3) + y.substr(6, y.size() - 7), p, 2);
    return inner.substr(0, 3) + "d3[" + inner.substr(3) + "]";
  }

  // The canonical mediating isomorphism between parallel composites of the
  // same chain: match apex elements by their flattened atom list and legs.
  ACell mediator(const ACell& lo, const ACell& hi) const {
    std::string pre = lo.substr(0, 3);
    SpanCell s = parse_span(lo.substr(3)), t = parse_span(hi.substr(3));
    auto key = [](const std::string& e) {
      std::string k = std::to_string(leg(e, true)) + "|" +
                      std::to_string(leg(e, false)) + "|";
      for (const auto& tok : flatten_elt(e)) k += tok + ".";
      return k;
    };
    std::map<std::string, std::string> by_key;
    for (const auto& f : t.elems) {
      auto [it, fresh] = by_key.emplace(key(f), f);
      if (!fresh)
        throw AlgebraGap("span mediator: flattening not injective on " + hi);
    }
    MapCell m;
    m.src = lo.substr(3);
    m.tgt = hi.substr(3);
    for (const auto& e : s.elems) {
      auto it = by_key.find(key(e));
      if (it == by_key.end())
        throw AlgebraGap("span mediator: no partner for " + e + " in " + hi);
      m.graph.emplace_back(e, it->second);
    }
    if (m.graph.size() != t.elems.size())
      throw AlgebraGap("span mediator: not a bijection between\n  " + lo +
                       "\n  " + hi);
    return pre + m.encode();
  }

  int max_set_;
  int max_dim_;
  Collection coll_;
};

}  // namespace

std::vector<std::string> span_flatten_element(const std::string& elt) {
  return flatten_elt(elt);
}

std::shared_ptr<const Algebra> make_span_algebra(int max_set, int max_dim) {
  return std::make_shared<SpanAlgebra>(max_set, max_dim);
}

}  // namespace globop
