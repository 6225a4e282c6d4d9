// brauer - diagram semigroups and complexity bounds

#include "brauer/diagram.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace brauer {

  namespace {
    constexpr std::uint8_t NONE8 = 0xFF;

    void check_degree(std::size_t n) {
      if (n == 0 || n > MAX_DEGREE) {
        throw BadDegree("degree must lie in 1.." + std::to_string(MAX_DEGREE)
                        + ", got " + std::to_string(n));
      }
    }

    std::size_t wrap(long i, std::size_t n) {
      long m = static_cast<long>(n);
      return static_cast<std::size_t>(((i % m) + m) % m);
    }

    // Union-find over at most 3 * MAX_DEGREE nodes, stack allocated.
    class SmallUnionFind {
     public:
      explicit SmallUnionFind(std::size_t size) {
        for (std::size_t i = 0; i < size; ++i) {
          _parent[i] = static_cast<std::uint8_t>(i);
        }
      }

      std::uint8_t find(std::uint8_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::uint8_t x, std::uint8_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::array<std::uint8_t, 3 * MAX_DEGREE> _parent;
    };

    using LabelBuffer = std::array<std::uint8_t, 2 * MAX_DEGREE>;

    // Relabels a so that point (side, i) moves to (side, i + k) on the
    // selected rows.
    Diagram rotate(Diagram const& a, long bottom_offset, long top_offset) {
      std::size_t n = a.degree();
      LabelBuffer buf;
      for (std::size_t i = 0; i < n; ++i) {
        buf[wrap(static_cast<long>(i) + bottom_offset, n)] = a.label(i);
        buf[n + wrap(static_cast<long>(i) + top_offset, n)] = a.label(n + i);
      }
      return Diagram::from_small_labels(n, buf.data());
    }

    using Chord = std::pair<std::size_t, std::size_t>;

    // 2-point blocks as chords on the boundary walk Bottom 1..n, Top n..1.
    std::vector<Chord> chords(Diagram const& a) {
      std::size_t n = a.degree();
      if (!is_partial_brauer(a)) {
        throw UnsupportedBlockSize(
            "planarity is only defined for blocks of size at most 2");
      }
      std::vector<std::size_t> first(a.num_blocks(), SIZE_MAX);
      std::vector<Chord>       result;
      for (std::size_t pos = 0; pos < 2 * n; ++pos) {
        std::size_t walk = pos < n ? pos : 3 * n - 1 - pos;
        std::size_t l    = a.label(pos);
        if (first[l] == SIZE_MAX) {
          first[l] = walk;
        } else {
          result.emplace_back(std::min(first[l], walk),
                              std::max(first[l], walk));
        }
      }
      return result;
    }

    bool non_crossing(std::vector<Chord> const& cs, std::size_t num_positions) {
      std::vector<std::size_t> partner(num_positions, SIZE_MAX);
      for (auto const& [x, y] : cs) {
        partner[x] = y;
        partner[y] = x;
      }
      std::vector<std::size_t> stack;
      for (std::size_t pos = 0; pos < num_positions; ++pos) {
        if (partner[pos] == SIZE_MAX) {
          continue;
        }
        if (partner[pos] > pos) {
          stack.push_back(pos);
        } else {
          if (stack.empty() || stack.back() != partner[pos]) {
            return false;
          }
          stack.pop_back();
        }
      }
      return true;
    }
  }  // namespace

  char const* to_string(StringKind kind) {
    switch (kind) {
      case StringKind::Through:
        return "through";
      case StringKind::Inner:
        return "inner";
      case StringKind::Outer:
        return "outer";
      case StringKind::BottomSingleton:
        return "bottom-singleton";
      case StringKind::TopSingleton:
        return "top-singleton";
      case StringKind::Other:
        return "other";
    }
    return "?";
  }

  char const* to_string(Parity parity) {
    switch (parity) {
      case Parity::Even:
        return "even";
      case Parity::Odd:
        return "odd";
      case Parity::Mixed:
        return "mixed";
      case Parity::RankZero:
        return "rank-zero";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram
  ////////////////////////////////////////////////////////////////////////

  Diagram Diagram::from_small_labels(std::size_t n, std::uint8_t const* raw) {
    check_degree(n);
    std::array<std::uint8_t, 256> relabel;
    relabel.fill(NONE8);
    Diagram      d;
    std::uint8_t next = 0;
    d._degree         = static_cast<std::uint8_t>(n);
    d._labels.resize(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      std::uint8_t& r = relabel[raw[i]];
      if (r == NONE8) {
        r = next++;
      }
      d._labels[i] = r;
    }
    d._num_blocks = next;
    return d;
  }

  Diagram Diagram::from_labels(std::size_t                      n,
                               std::vector<std::uint32_t> const& labels) {
    check_degree(n);
    if (labels.size() != 2 * n) {
      throw BadIndex("expected " + std::to_string(2 * n) + " labels, got "
                     + std::to_string(labels.size()));
    }
    std::unordered_map<std::uint32_t, std::uint8_t> relabel;
    LabelBuffer                                     buf;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      auto it = relabel.try_emplace(labels[i],
                                    static_cast<std::uint8_t>(relabel.size()))
                    .first;
      buf[i] = it->second;
    }
    return from_small_labels(n, buf.data());
  }

  Diagram Diagram::from_blocks(std::size_t n, std::vector<Block> const& blocks) {
    check_degree(n);
    LabelBuffer buf;
    buf.fill(NONE8);
    std::uint8_t next = 0;
    for (auto const& block : blocks) {
      if (block.empty()) {
        throw BadIndex("empty block");
      }
      for (auto const& p : block) {
        if (p.index < 1 || p.index > n) {
          throw BadIndex("point index " + std::to_string(p.index)
                         + " out of range 1.." + std::to_string(n));
        }
        std::size_t pos = (p.side == Side::Bottom ? 0 : n) + p.index - 1;
        if (buf[pos] != NONE8) {
          throw BadIndex("point " + std::to_string(p.index)
                         + (p.side == Side::Top ? "'" : "")
                         + " occurs in more than one block");
        }
        buf[pos] = next;
      }
      ++next;
    }
    for (std::size_t pos = 0; pos < 2 * n; ++pos) {
      if (buf[pos] == NONE8) {
        throw BadIndex("blocks do not cover every point");
      }
    }
    return from_small_labels(n, buf.data());
  }

  std::vector<Block> Diagram::blocks() const {
    std::vector<Block> result(_num_blocks);
    for (std::size_t pos = 0; pos < _labels.size(); ++pos) {
      result[_labels[pos]].push_back(point(pos));
    }
    return result;
  }

  std::size_t Diagram::hash() const noexcept {
    // FNV-1a
    std::uint64_t h = 14695981039346656037ULL ^ _degree;
    for (auto x : _labels) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and structure
  ////////////////////////////////////////////////////////////////////////

  Diagram identity(std::size_t n) {
    check_degree(n);
    LabelBuffer buf;
    for (std::size_t i = 0; i < n; ++i) {
      buf[i] = buf[n + i] = static_cast<std::uint8_t>(i);
    }
    return Diagram::from_small_labels(n, buf.data());
  }

  Diagram multiply(Diagram const& a, Diagram const& b) {
    std::size_t const n = a.degree();
    if (b.degree() != n) {
      throw DegreeMismatch("cannot multiply diagrams of degree "
                           + std::to_string(n) + " and "
                           + std::to_string(b.degree()));
    }
    // Nodes 0..n-1: a's bottom row; n..2n-1: the shared middle row (a's top,
    // b's bottom); 2n..3n-1: b's top row. Point p of a is node p, point p
    // of b is node n + p.
    SmallUnionFind                          uf(3 * n);
    std::array<std::uint8_t, 2 * MAX_DEGREE> first;
    first.fill(NONE8);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto l = a.label(p);
      if (first[l] == NONE8) {
        first[l] = static_cast<std::uint8_t>(p);
      } else {
        uf.unite(first[l], static_cast<std::uint8_t>(p));
      }
    }
    first.fill(NONE8);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto l = b.label(p);
      if (first[l] == NONE8) {
        first[l] = static_cast<std::uint8_t>(n + p);
      } else {
        uf.unite(first[l], static_cast<std::uint8_t>(n + p));
      }
    }
    LabelBuffer buf;
    for (std::size_t p = 0; p < n; ++p) {
      buf[p]     = uf.find(static_cast<std::uint8_t>(p));
      buf[n + p] = uf.find(static_cast<std::uint8_t>(2 * n + p));
    }
    return Diagram::from_small_labels(n, buf.data());
  }

  Diagram power(Diagram const& a, std::size_t k) {
    Diagram result = identity(a.degree());
    Diagram base   = a;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  Diagram star(Diagram const& a) {
    std::size_t n = a.degree();
    LabelBuffer buf;
    for (std::size_t i = 0; i < n; ++i) {
      buf[i]     = a.label(n + i);
      buf[n + i] = a.label(i);
    }
    return Diagram::from_small_labels(n, buf.data());
  }

  namespace {
    // Bit l set iff block l meets the given row.
    std::bitset<2 * MAX_DEGREE> row_blocks(Diagram const& a, Side side) {
      std::bitset<2 * MAX_DEGREE> result;
      std::size_t                 n      = a.degree();
      std::size_t                 offset = side == Side::Bottom ? 0 : n;
      for (std::size_t i = 0; i < n; ++i) {
        result.set(a.label(offset + i));
      }
      return result;
    }

    std::bitset<2 * MAX_DEGREE> through_blocks(Diagram const& a) {
      return row_blocks(a, Side::Bottom) & row_blocks(a, Side::Top);
    }
  }  // namespace

  std::size_t rank(Diagram const& a) {
    return through_blocks(a).count();
  }

  std::vector<std::size_t> domain(Diagram const& a) {
    auto                     through = through_blocks(a);
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (through.test(a.label(i))) {
        result.push_back(i + 1);
      }
    }
    return result;
  }

  std::vector<std::size_t> range(Diagram const& a) {
    auto                     through = through_blocks(a);
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (through.test(a.label(a.degree() + i))) {
        result.push_back(i + 1);
      }
    }
    return result;
  }

  std::vector<std::pair<Block, StringKind>> classify_strings(Diagram const& a) {
    std::vector<std::pair<Block, StringKind>> result;
    for (auto& block : a.blocks()) {
      bool bottom = std::any_of(block.begin(), block.end(), [](Point p) {
        return p.side == Side::Bottom;
      });
      bool top = std::any_of(block.begin(), block.end(), [](Point p) {
        return p.side == Side::Top;
      });
      StringKind kind;
      if (block.size() == 1) {
        kind = bottom ? StringKind::BottomSingleton : StringKind::TopSingleton;
      } else if (block.size() > 2) {
        kind = StringKind::Other;
      } else if (bottom && top) {
        kind = StringKind::Through;
      } else {
        kind = bottom ? StringKind::Inner : StringKind::Outer;
      }
      result.emplace_back(std::move(block), kind);
    }
    return result;
  }

  Parity parity(Diagram const& a) {
    std::size_t n = a.degree();
    // For each block: bit 0 = some bottom index is odd, bit 1 = even;
    // likewise bits 2, 3 for the top row.
    std::vector<std::uint8_t> seen(a.num_blocks(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      seen[a.label(i)] |= ((i + 1) % 2 == 1) ? 1 : 2;
      seen[a.label(n + i)] |= ((i + 1) % 2 == 1) ? 4 : 8;
    }
    bool even = false, odd = false;
    for (auto s : seen) {
      bool b_odd = s & 1, b_even = s & 2, t_odd = s & 4, t_even = s & 8;
      if (!(b_odd || b_even) || !(t_odd || t_even)) {
        continue;  // not a through block
      }
      even |= (b_odd && t_odd) || (b_even && t_even);
      odd |= (b_odd && t_even) || (b_even && t_odd);
    }
    if (!even && !odd) {
      return Parity::RankZero;
    }
    if (even && odd) {
      return Parity::Mixed;
    }
    return even ? Parity::Even : Parity::Odd;
  }

  bool is_idempotent(Diagram const& a) {
    return a * a == a;
  }

  bool is_projection(Diagram const& a) {
    return star(a) == a && is_idempotent(a);
  }

  Diagram shift(Diagram const& a, long k) {
    return rotate(a, k, k);
  }

  Diagram twist(Diagram const& a, long k) {
    return rotate(a, 0, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Named elements
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Starts from vertical lines {k, k'} and lets the caller rewire.
    struct Builder {
      explicit Builder(std::size_t n) : n(n) {
        check_degree(n);
        for (std::size_t i = 0; i < n; ++i) {
          buf[i] = buf[n + i] = static_cast<std::uint8_t>(i);
        }
        next = static_cast<std::uint8_t>(n);
      }

      // Puts the given 1-based points into a fresh block.
      void join(std::initializer_list<Point> points) {
        for (auto p : points) {
          buf[(p.side == Side::Bottom ? 0 : n) + p.index - 1] = next;
        }
        ++next;
      }

      Diagram build() const {
        return Diagram::from_small_labels(n, buf.data());
      }

      std::size_t  n;
      LabelBuffer  buf;
      std::uint8_t next;
    };

    Point B(std::size_t i) {
      return Point::bottom(i);
    }
    Point T(std::size_t i) {
      return Point::top(i);
    }
  }  // namespace

  Diagram zeta(std::size_t n) {
    return zeta_power(n, 1);
  }

  Diagram zeta_power(std::size_t n, long k) {
    check_degree(n);
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = wrap(static_cast<long>(i) + k, n) + 1;
    }
    return embed_permutation(n, images);
  }

  Diagram gamma_pair(std::size_t n, std::size_t i, std::size_t j) {
    if (!(1 <= i && i < j && j <= n)) {
      throw BadIndex("gamma_pair requires 1 <= i < j <= n, got i = "
                     + std::to_string(i) + ", j = " + std::to_string(j)
                     + ", n = " + std::to_string(n));
    }
    Builder b(n);
    b.join({B(i), B(j)});
    b.join({T(i), T(j)});
    return b.build();
  }

  Diagram gamma_cyc(std::size_t n, std::size_t i) {
    if (n < 2 || i < 1 || i > n) {
      throw BadIndex("gamma_cyc requires n >= 2 and 1 <= i <= n, got i = "
                     + std::to_string(i) + ", n = " + std::to_string(n));
    }
    std::size_t j = i % n + 1;
    return gamma_pair(n, std::min(i, j), std::max(i, j));
  }

  Diagram epsilon(std::size_t n) {
    if (n < 6 || n % 2 != 0) {
      throw BadIndex("epsilon requires an even degree >= 6, got "
                     + std::to_string(n));
    }
    Builder b(n);
    b.join({B(2), B(3)});
    b.join({T(2), T(3)});
    b.join({B(n - 1), B(n)});
    b.join({T(n - 1), T(n)});
    return b.build();
  }

  Diagram sigma(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
      throw BadIndex("sigma requires 1 <= i <= n, got i = " + std::to_string(i)
                     + ", n = " + std::to_string(n));
    }
    Builder b(n);
    b.join({B(i)});
    b.join({T(i)});
    return b.build();
  }

  Diagram lambda_elt(std::size_t n) {
    if (n < 3) {
      throw BadDegree("lambda requires n >= 3, got " + std::to_string(n));
    }
    Builder b(n);
    b.join({B(n - 1), B(n)});
    b.join({T(1), T(2)});
    for (std::size_t k = 1; k <= n - 2; ++k) {
      b.join({B(k), T(k + 2)});
    }
    return b.build();
  }

  Diagram xi_elt(std::size_t n) {
    if (n < 3) {
      throw BadDegree("xi requires n >= 3, got " + std::to_string(n));
    }
    Builder b(n);
    for (std::size_t k = 1; k <= n - 2; ++k) {
      b.join({B(k), T((k + 1) % (n - 2) + 1)});
    }
    b.join({B(n - 1), B(n)});
    b.join({T(n - 1), T(n)});
    return b.build();
  }

  Diagram tau_elt(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
      throw BadDegree("tau requires an odd degree >= 3, got "
                      + std::to_string(n));
    }
    Builder b(n);
    for (std::size_t k = 1; k <= n - 2; ++k) {
      b.join({B(k), T(k + 1)});
    }
    b.join({B(n - 1), B(n)});
    b.join({T(1), T(n)});
    return b.build();
  }

  bool verify_named_elements(std::size_t n) {
    if (n < 3) {
      throw BadDegree("named elements require n >= 3");
    }
    Diagram lambda = identity(n);
    for (std::size_t i = n - 1; i >= 1; --i) {
      lambda = lambda * gamma_cyc(n, i);
    }
    if (lambda != lambda_elt(n)) {
      return false;
    }
    Diagram xi = lambda * gamma_cyc(n, n) * gamma_cyc(n, n - 1);
    if (xi != xi_elt(n)) {
      return false;
    }
    if (n % 2 == 0) {
      return power(xi, (n - 2) / 2) == gamma_cyc(n, n - 1);
    }
    return power(xi, (n - 1) / 2) * gamma_cyc(n, n) == tau_elt(n);
  }

  Diagram embed_permutation(std::size_t                     n,
                            std::vector<std::size_t> const& images) {
    check_degree(n);
    if (images.size() != n) {
      throw NotABijection("expected " + std::to_string(n) + " images");
    }
    std::vector<bool> hit(n, false);
    LabelBuffer       buf;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t img = images[k];
      if (img < 1 || img > n || hit[img - 1]) {
        throw NotABijection("images do not form a permutation of 1.."
                            + std::to_string(n));
      }
      hit[img - 1]     = true;
      buf[k]           = static_cast<std::uint8_t>(k);
      buf[n + img - 1] = static_cast<std::uint8_t>(k);
    }
    return Diagram::from_small_labels(n, buf.data());
  }

  Diagram embed_transformation(std::size_t                     n,
                               std::vector<std::size_t> const& images) {
    check_degree(n);
    if (images.size() != n) {
      throw BadIndex("expected " + std::to_string(n) + " images");
    }
    LabelBuffer buf;
    for (std::size_t k = 0; k < n; ++k) {
      if (images[k] < 1 || images[k] > n) {
        throw BadIndex("image out of range 1.." + std::to_string(n));
      }
      buf[n + k] = static_cast<std::uint8_t>(k);
      buf[k]     = static_cast<std::uint8_t>(images[k] - 1);
    }
    return Diagram::from_small_labels(n, buf.data());
  }

  ////////////////////////////////////////////////////////////////////////
  // Family predicates
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::array<std::uint8_t, 2 * MAX_DEGREE> block_sizes(Diagram const& a) {
      std::array<std::uint8_t, 2 * MAX_DEGREE> sizes{};
      for (auto l : a.labels()) {
        ++sizes[l];
      }
      return sizes;
    }
  }  // namespace

  bool is_brauer(Diagram const& a) {
    auto sizes = block_sizes(a);
    return std::all_of(sizes.begin(), sizes.begin() + a.num_blocks(), [](auto s) {
      return s == 2;
    });
  }

  bool is_partial_brauer(Diagram const& a) {
    auto sizes = block_sizes(a);
    return std::all_of(sizes.begin(), sizes.begin() + a.num_blocks(), [](auto s) {
      return s <= 2;
    });
  }

  bool is_planar(Diagram const& a) {
    return non_crossing(chords(a), 2 * a.degree());
  }

  bool is_annular(Diagram const& a) {
    std::size_t n = a.degree();
    chords(a);  // block-size check
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        Diagram rotated = rotate(a, static_cast<long>(r), static_cast<long>(s));
        if (non_crossing(chords(rotated), 2 * n)) {
          return true;
        }
      }
    }
    return false;
  }

  bool is_jones(Diagram const& a) {
    return is_brauer(a) && is_planar(a);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  std::string encode(Diagram const& a) {
    std::string out = std::to_string(a.degree()) + ":[";
    bool        first_block = true;
    for (auto const& block : a.blocks()) {
      if (!first_block) {
        out += ',';
      }
      first_block = false;
      out += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(block[i].index);
        if (block[i].side == Side::Top) {
          out += '\'';
        }
      }
      out += '}';
    }
    out += ']';
    return out;
  }

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _pos);
      }

      bool at_end() const {
        return _pos >= _text.size();
      }

      char peek() const {
        return at_end() ? '\0' : _text[_pos];
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      std::size_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected a number");
        }
        std::size_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + static_cast<std::size_t>(peek() - '0');
          if (value > 1000000) {
            fail("number too large");
          }
          ++_pos;
        }
        return value;
      }

      std::size_t pos() const {
        return _pos;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Diagram decode(std::string_view text, std::size_t n) {
    Parser      p(text);
    std::size_t degree = p.number();
    if (degree == 0 || degree > MAX_DEGREE) {
      p.fail("degree out of range");
    }
    if (n != 0 && degree != n) {
      p.fail("expected degree " + std::to_string(n) + ", found "
             + std::to_string(degree));
    }
    p.expect(':');
    p.expect('[');
    LabelBuffer buf;
    buf.fill(NONE8);
    std::uint8_t next = 0;
    if (p.peek() != ']') {
      while (true) {
        p.expect('{');
        while (true) {
          std::size_t where = p.pos();
          std::size_t index = p.number();
          bool        top   = false;
          if (p.peek() == '\'') {
            top = true;
            p.expect('\'');
          }
          if (index < 1 || index > degree) {
            throw ParseError("point index out of range", where);
          }
          std::size_t pos = (top ? degree : 0) + index - 1;
          if (buf[pos] != NONE8) {
            throw ParseError("point occurs twice", where);
          }
          buf[pos] = next;
          if (p.peek() == ',') {
            p.expect(',');
            continue;
          }
          p.expect('}');
          break;
        }
        ++next;
        if (p.peek() == ',') {
          p.expect(',');
          continue;
        }
        break;
      }
    }
    p.expect(']');
    if (!p.at_end()) {
      p.fail("trailing characters");
    }
    for (std::size_t pos = 0; pos < 2 * degree; ++pos) {
      if (buf[pos] == NONE8) {
        p.fail("point " + std::to_string(pos % degree + 1)
               + (pos >= degree ? "'" : "") + " missing");
      }
    }
    return Diagram::from_small_labels(degree, buf.data());
  }

  std::ostream& operator<<(std::ostream& os, Diagram const& a) {
    return os << encode(a);
  }

}  // namespace brauer
